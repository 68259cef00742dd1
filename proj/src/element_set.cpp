#include "sbrokit/element_set.hpp"

#include <algorithm>

#include "sbrokit/search.hpp"

namespace sbrokit {

ElementSet ElementSet::from(std::span<const int> elements) {
  ElementSet out;
  for (int e : elements) out = out.with(e);
  return out;
}

std::vector<int> ElementSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int e : *this) out.push_back(e);
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : *this) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

bool lex_less(ElementSet a, ElementSet b) {
  auto va = a.to_vector();
  auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(),
                                      vb.end());
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::found:
      return "found";
    case Verdict::none:
      return "none";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace sbrokit
