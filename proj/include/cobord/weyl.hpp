#pragma once

#include "cobord/root_datum.hpp"

#include <map>

namespace cobord {

struct WeylElement {
    LatticeMap matrix;
    int length = 0;
    std::vector<std::size_t> word; // lexicographically least reduced word
};

// Finite Weyl group, elements ordered by length then reduced word.
// Element 0 is the identity; element 1 + i is the simple reflection s_i.
class WeylGroup {
  public:
    WeylGroup(const RootDatum& rd, std::size_t cap);

    std::size_t size() const { return elements_.size(); }
    const WeylElement& operator[](std::size_t w) const { return elements_[w]; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::size_t rank() const { return rank_; }

    std::size_t identity() const { return 0; }
    std::size_t generator(std::size_t i) const { return generators_.at(i); }
    std::size_t num_generators() const { return generators_.size(); }
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t index_of(const LatticeMap& m) const;
    std::size_t longest() const { return elements_.size() - 1; }

    // Coefficients of sum_w q^{l(w)}.
    std::vector<long> length_polynomial() const;

  private:
    std::size_t rank_;
    std::vector<WeylElement> elements_;
    std::vector<std::size_t> generators_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::map<LatticeMap, std::size_t> index_;
};

WeylGroup weyl_enumerate(const RootDatum& rd, std::size_t cap = 100000);

// All roots {w alpha_i}.
std::vector<LatticeVector> all_roots(const RootDatum& rd, const WeylGroup& w);

} // namespace cobord
