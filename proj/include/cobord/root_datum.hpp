#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cobord {

using LatticeVector = std::vector<long>;

// Small dense integer matrix acting on column vectors of the character
// lattice; column j is the image of the j-th basis character.
class LatticeMap {
  public:
    LatticeMap() = default;
    explicit LatticeMap(std::size_t n) : n_(n), a_(n * n, 0) {}
    static LatticeMap identity(std::size_t n);

    std::size_t dim() const { return n_; }
    long& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    long operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    LatticeVector apply(const LatticeVector& v) const;
    LatticeVector column(std::size_t j) const;
    LatticeMap transpose() const;
    long determinant() const;

    friend LatticeMap operator*(const LatticeMap& a, const LatticeMap& b);
    friend bool operator==(const LatticeMap&, const LatticeMap&) = default;
    friend auto operator<=>(const LatticeMap&, const LatticeMap&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<long> a_;
};

class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Character lattice Z^rank with simple roots (character coordinates) and
// simple coroots (dual coordinates).
struct RootDatum {
    std::string name;
    std::size_t rank = 0;
    std::vector<LatticeVector> simple_roots;
    std::vector<LatticeVector> simple_coroots;

    std::size_t num_simple() const { return simple_roots.size(); }
    // <lambda, alpha_i^vee>
    long coroot_pairing(const LatticeVector& lambda, std::size_t i) const;
    // A_{ij} = <alpha_j, alpha_i^vee>
    std::vector<std::vector<long>> cartan_matrix() const;
    LatticeMap reflection(std::size_t i) const;

    // Throws UsageError unless the data is a finite-type root datum.
    void validate() const;
};

// Presets: Torus(r), SL(n), GL(n), PGL(2), Sp(4), G2. Accepts the compact
// spellings T2, SL3, GL2, PGL2, Sp4 as well.
RootDatum root_datum_preset(std::string_view name);
std::vector<std::string> supported_presets();

// {"rank", "simple_roots", "simple_coroots", "name"}
RootDatum root_datum_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RootDatum& rd);

// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, i zero-based.
LatticeVector reflection_action(const RootDatum& rd, std::size_t i, const LatticeVector& lambda);

} // namespace cobord
