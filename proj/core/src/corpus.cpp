#include "renlab/corpus.hpp"

#include "renlab/errors.hpp"

namespace renlab {

MassVector spacing_mass(int k, std::uint64_t seed, std::uint64_t index) {
  return from_simplex_point(random_simplex_point(k, seed, index));
}

MassVector floored_mass(int k, std::uint64_t seed, std::uint64_t index) {
  MassVector base = spacing_mass(k, seed, index);
  std::vector<Rational> p(static_cast<std::size_t>(k), Rational(0));
  const Rational floor(Integer(1), Integer(4) * k);
  const Rational weight(3, 4);
  for (int l = 0; l < k; ++l) {
    Rational w = l < base.k ? base.p[static_cast<std::size_t>(l)] : Rational(0);
    Rational v = weight * w + floor;
    v.canonicalize();
    p[static_cast<std::size_t>(l)] = v;
  }
  return make_masses(p);
}

std::vector<MassVector> make_corpus(std::uint64_t count, std::uint64_t seed, int k_min,
                                    int k_max, bool floored) {
  if (k_min < 1 || k_max < k_min)
    throw Error("OutOfRange", "need 1 <= k_min <= k_max");
  std::vector<MassVector> out;
  out.reserve(count);
  const int span = k_max - k_min + 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    int k = k_min + static_cast<int>(i % static_cast<std::uint64_t>(span));
    out.push_back(floored ? floored_mass(k, seed, i) : spacing_mass(k, seed, i));
  }
  return out;
}

}  // namespace renlab
