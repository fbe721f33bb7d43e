#include "cobord/weyl.hpp"

#include <set>
#include <stdexcept>

#include "cobord/poly.hpp"

namespace cobord {

WeylGroup::WeylGroup(const RootDatum& rd, std::size_t cap) : rank_(rd.rank) {
    std::vector<LatticeMap> gens;
    for (std::size_t i = 0; i < rd.num_simple(); ++i)
        gens.push_back(rd.reflection(i));

    elements_.push_back({LatticeMap::identity(rd.rank), 0, {}});
    index_.emplace(elements_[0].matrix, 0);
    std::size_t level_begin = 0, level_end = 1;
    int length = 0;
    // Scanning the previous level in reduced-word order and appending
    // generators in increasing order meets each element first through its
    // lexicographically least reduced word.
    while (level_begin < level_end) {
        ++length;
        for (std::size_t u = level_begin; u < level_end; ++u)
            for (std::size_t i = 0; i < gens.size(); ++i) {
                LatticeMap m = elements_[u].matrix * gens[i];
                if (index_.count(m))
                    continue;
                if (elements_.size() >= cap)
                    throw InternalError("weyl_enumerate: element cap exceeded (" +
                                        std::to_string(cap) + ")");
                std::vector<std::size_t> word = elements_[u].word;
                word.push_back(i);
                index_.emplace(m, elements_.size());
                elements_.push_back({std::move(m), length, std::move(word)});
            }
        level_begin = level_end;
        level_end = elements_.size();
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        generators_.push_back(index_.at(gens[i]));

    const std::size_t n = elements_.size();
    table_.assign(n, std::vector<std::size_t>(n));
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            table_[a][b] = index_.at(elements_[a].matrix * elements_[b].matrix);
            if (table_[a][b] == 0)
                inverse_[a] = b;
        }
}

std::size_t WeylGroup::index_of(const LatticeMap& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
        throw std::out_of_range("matrix is not a Weyl group element");
    return it->second;
}

std::vector<long> WeylGroup::length_polynomial() const {
    std::vector<long> p(static_cast<std::size_t>(elements_.back().length) + 1, 0);
    for (const auto& e : elements_)
        ++p[static_cast<std::size_t>(e.length)];
    return p;
}

WeylGroup weyl_enumerate(const RootDatum& rd, std::size_t cap) { return WeylGroup(rd, cap); }

std::vector<LatticeVector> all_roots(const RootDatum& rd, const WeylGroup& w) {
    std::set<LatticeVector> roots;
    for (const auto& e : w.elements())
        for (const auto& a : rd.simple_roots)
            roots.insert(e.matrix.apply(a));
    return {roots.begin(), roots.end()};
}

} // namespace cobord
