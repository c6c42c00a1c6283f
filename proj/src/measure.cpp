#include "liouville/measure.hpp"

#include <algorithm>

#include "liouville/error.hpp"

namespace liouville {

ProbMeasure::ProbMeasure(std::vector<Atom> atoms, bool symmetric, std::string description)
    : atoms_(std::move(atoms)), symmetric_(symmetric), description_(std::move(description)) {
  if (atoms_.empty()) throw Error(Errc::BadMeasure, "measure has no atoms");
  Rational total = 0;
  for (const auto& a : atoms_) {
    if (sgn(a.weight) <= 0) throw Error(Errc::BadMeasure, "weight " + to_string(a.weight) + " is not positive");
    total += a.weight;
  }
  if (total != 1) throw Error(Errc::BadMeasure, "weights sum to " + to_string(total));
  if (symmetric_) {
    for (const auto& a : atoms_) {
      const auto inv = a.element.inverse();
      const bool found = std::any_of(atoms_.begin(), atoms_.end(), [&](const Atom& b) {
        return b.weight == a.weight && b.element == inv;
      });
      if (!found) throw Error(Errc::BadMeasure, "measure flagged symmetric lacks an inverse atom");
    }
  }
}

PLMap thompson_x0() {
  return PLMap::make({{Dyadic(0), Dyadic(0)},
                      {Dyadic::parse("1/2"), Dyadic::parse("1/4")},
                      {Dyadic::parse("3/4"), Dyadic::parse("1/2")},
                      {Dyadic(1), Dyadic(1)}},
                     0, 0);
}

PLMap thompson_x1() {
  return PLMap::make({{Dyadic::parse("1/2"), Dyadic::parse("1/2")},
                      {Dyadic::parse("3/4"), Dyadic::parse("5/8")},
                      {Dyadic::parse("7/8"), Dyadic::parse("3/4")},
                      {Dyadic(1), Dyadic(1)}},
                     0, 0);
}

namespace {

ProbMeasure lazy_uniform(const std::vector<PLMap>& generators, std::string description) {
  std::vector<Atom> atoms;
  atoms.push_back({PLMap::identity(), Rational(1, 2)});
  const Rational w(1, 2 * static_cast<long>(generators.size()) * 2);
  for (const auto& g : generators) {
    atoms.push_back({g, w});
    atoms.push_back({g.inverse(), w});
  }
  return ProbMeasure(std::move(atoms), true, std::move(description));
}

}  // namespace

ProbMeasure lazy_translation_measure() {
  return lazy_uniform({PLMap::translation(Dyadic(1))}, "lazy-translation: 1/2 id + 1/4 T + 1/4 T^-1");
}

ProbMeasure default_f_measure() {
  return lazy_uniform({thompson_x0(), thompson_x1()},
                      "default-F: 1/2 id + 1/8 each of x0^+-1, x1^+-1 (non-degeneracy asserted)");
}

ProbMeasure default_fr_measure() {
  return lazy_uniform({thompson_x0(), thompson_x1(), PLMap::translation(Dyadic(1))},
                      "default-FR: 1/2 id + 1/12 each of x0^+-1, x1^+-1, T^+-1 (non-degeneracy asserted)");
}

}  // namespace liouville
