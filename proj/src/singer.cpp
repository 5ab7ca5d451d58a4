/**************************************************************************
 * singer.cpp
 *
 * Copyright 2026 The psca Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "psca/singer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace psca {

namespace {

std::uint64_t plane_size(std::uint64_t q) { return q * q + q + 1; }

// GF(q^3) together with an embedding of field_of_order(q) as its subfield.
struct CubicExtension {
    Field small;
    Field big;
    std::uint64_t r;
    std::vector<FieldElement> embed;  // indexed by small-field element value

    explicit CubicExtension(std::uint64_t q) : small(field_of_order(q)), big(Field::build(small.characteristic(), 3 * small.degree())), r(plane_size(q)) {
        embed.assign(small.order(), big.zero());
        if (small.degree() == 1) {
            // Constants of the big field form the prime field with the same values.
            for (std::uint32_t a = 0; a < small.order(); ++a) embed[a] = FieldElement{a};
        } else {
            // Send the small field's primitive x to the subfield root of its
            // modulus with least discrete log; extend multiplicatively.
            const auto& mod = small.modulus();
            FieldElement gamma{};
            bool found = false;
            for (std::uint32_t k = 1; k < small.order() && !found; ++k) {
                const FieldElement cand = big.exp(static_cast<std::int64_t>(k) * static_cast<std::int64_t>(r));
                FieldElement acc = big.zero();
                for (auto c : mod) acc = big.add(big.mul(acc, cand), FieldElement{c});
                if (acc.value == 0) {
                    gamma = cand;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("subfield root of the modulus not found");
            for (std::uint32_t a = 1; a < small.order(); ++a) {
                embed[a] = big.pow(gamma, small.log(FieldElement{a}));
            }
        }
        for (std::uint32_t a = 0; a < small.order(); ++a) {
            for (std::uint32_t b = 0; b < small.order(); ++b) {
                const auto sum = small.add(FieldElement{a}, FieldElement{b});
                if (embed[sum.value] != big.add(embed[a], embed[b])) {
                    throw std::logic_error("subfield embedding is not additive");
                }
            }
        }
    }

    std::uint32_t label(FieldElement c0, FieldElement c1, FieldElement c2) const {
        const FieldElement w = big.primitive();
        const FieldElement x =
            big.add(embed[c0.value], big.add(big.mul(embed[c1.value], w), big.mul(embed[c2.value], big.mul(w, w))));
        return static_cast<std::uint32_t>(big.log(x) % r);
    }
};

SingerLabeling finish(const Geometry& g, std::vector<std::uint32_t> label, DifferenceSet d) {
    SingerLabeling out{Labeling(std::move(label)), std::move(d), {}};
    out.lines = translate_lines(out.difference_set);
    std::set<std::vector<std::uint32_t>> expected(out.lines.begin(), out.lines.end());
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& line : g.lines()) {
        std::vector<std::uint32_t> labels;
        for (auto p : line) labels.push_back(out.psi.label(p));
        std::sort(labels.begin(), labels.end());
        got.insert(std::move(labels));
    }
    if (got != expected) throw std::logic_error("labeled lines are not the translates of the difference set");
    return out;
}

}  // namespace

DifferenceSet validate_difference_set(std::uint64_t q, std::span<const std::int64_t> elems) {
    if (!is_prime_power(q)) throw DifferenceSetError("q is not a prime power");
    const std::uint64_t r = plane_size(q);
    const auto ri = static_cast<std::int64_t>(r);
    std::set<std::uint32_t> residues;
    for (auto e : elems) {
        const auto x = static_cast<std::uint32_t>(((e % ri) + ri) % ri);
        if (!residues.insert(x).second) throw DifferenceSetError("repeated residue " + std::to_string(x));
    }
    if (residues.empty()) throw NotADifferenceSet("empty set");
    std::vector<std::uint64_t> hits(r, 0);
    for (auto a : residues) {
        for (auto b : residues) {
            if (a != b) ++hits[(a + r - b) % r];
        }
    }
    for (std::uint64_t x = 1; x < r; ++x) {
        if (hits[x] == 0) throw NotADifferenceSet("residue " + std::to_string(x) + " is not a difference");
    }
    for (std::uint64_t x = 1; x < r; ++x) {
        if (hits[x] > 1) {
            throw NonPlanarDifferenceSet("residue " + std::to_string(x) + " is a difference " +
                                         std::to_string(hits[x]) + " times");
        }
    }
    DifferenceSet d{q, r, {}};
    const std::uint32_t shift = *residues.begin();
    for (auto a : residues) d.elems.push_back(static_cast<std::uint32_t>(a - shift));
    return d;
}

DifferenceSet singer_difference_set(std::uint64_t q) {
    const CubicExtension ext(q);
    std::set<std::uint32_t> d;
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
            if (a == 0 && b == 0) continue;
            d.insert(ext.label(FieldElement{a}, FieldElement{b}, ext.small.zero()));
        }
    }
    const std::vector<std::int64_t> elems(d.begin(), d.end());
    auto out = validate_difference_set(q, elems);
    if (out.elems.size() != q + 1 || out.elems != std::vector<std::uint32_t>(d.begin(), d.end())) {
        throw std::logic_error("Singer set has the wrong shape");
    }
    return out;
}

std::uint32_t cyclic_index(const DifferenceSet& d, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(d.elems.size());
    return d.elems[static_cast<std::size_t>(((k % n) + n) % n)];
}

std::vector<std::vector<std::uint32_t>> translate_lines(const DifferenceSet& d) {
    std::vector<std::vector<std::uint32_t>> lines(d.r);
    for (std::uint64_t j = 0; j < d.r; ++j) {
        for (auto a : d.elems) lines[j].push_back(static_cast<std::uint32_t>((a + j) % d.r));
        std::sort(lines[j].begin(), lines[j].end());
    }
    return lines;
}

SingerLabeling labeling_from_singer(const Geometry& g) {
    if (g.dimension() != 2) throw GeometryError("Singer labeling needs a projective plane");
    const CubicExtension ext(g.order());
    std::vector<std::uint32_t> label(g.size());
    for (PointIndex p = 0; p < g.size(); ++p) {
        const auto c = g.coords(p);
        label[p] = ext.label(c[0], c[1], c[2]);
    }
    return finish(g, std::move(label), singer_difference_set(g.order()));
}

SingerLabeling labeling_from_difference_set(const Geometry& g, const DifferenceSet& d) {
    const SingerLabeling base = labeling_from_singer(g);
    if (d.q != g.order() || d.r != g.size()) throw DifferenceSetError("difference set does not match the plane");
    const std::uint64_t r = d.r;
    const std::set<std::uint32_t> target(base.difference_set.elems.begin(), base.difference_set.elems.end());
    // Find u, c with u d + c = D_singer, then relabel x -> u^-1 (x - c).
    for (std::uint64_t u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1) continue;
        for (std::uint64_t c = 0; c < r; ++c) {
            bool match = true;
            for (auto a : d.elems) {
                if (!target.contains(static_cast<std::uint32_t>((u * a + c) % r))) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            std::uint64_t u_inv = 1;
            while (u * u_inv % r != 1) ++u_inv;
            std::vector<std::uint32_t> label(g.size());
            for (PointIndex p = 0; p < g.size(); ++p) {
                const std::uint64_t x = base.psi.label(p);
                label[p] = static_cast<std::uint32_t>(u_inv * ((x + r - c) % r) % r);
            }
            return finish(g, std::move(label), d);
        }
    }
    throw DifferenceSetError("difference set is not an affine image of the Singer set");
}

}  // namespace psca
