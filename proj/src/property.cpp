#include "lamalpha/property.hpp"

namespace lam {

PropertySpec PropertySpec::mon(std::vector<Hypergraph> forbidden) {
  if (forbidden.empty())
    throw std::invalid_argument("PropertySpec: no forbidden graphs");
  PropertySpec p;
  p.mode = Mode::monotone;
  p.r = forbidden.front().r;
  for (const auto& f : forbidden)
    if (f.r != p.r)
      throw std::invalid_argument("PropertySpec: mixed uniformity");
  p.forbidden = std::move(forbidden);
  return p;
}

PropertySpec PropertySpec::her(std::vector<Hypergraph> forbidden) {
  PropertySpec p = mon(std::move(forbidden));
  p.mode = Mode::hereditary;
  return p;
}

PropertySpec PropertySpec::chromatic(int r, int p) {
  if (p < 1) throw std::invalid_argument("PropertySpec: bound must be >= 1");
  PropertySpec spec;
  spec.mode = Mode::chromatic_bounded;
  spec.r = r;
  spec.bound = p;
  return spec;
}

PropertySpec PropertySpec::weak_chromatic(int r, int q) {
  PropertySpec spec = chromatic(r, q);
  spec.mode = Mode::weak_chromatic_bounded;
  return spec;
}

bool PropertySpec::contains(const Hypergraph& g) const {
  switch (mode) {
    case Mode::monotone:
      for (const auto& f : forbidden)
        if (contains_subgraph(g, f)) return false;
      return true;
    case Mode::hereditary:
      for (const auto& f : forbidden)
        if (contains_induced(g, f)) return false;
      return true;
    case Mode::chromatic_bounded:
      return chromatic_number(g) <= bound;
    case Mode::weak_chromatic_bounded:
      return weak_chromatic_number(g) <= bound;
  }
  return false;
}

}  // namespace lam
