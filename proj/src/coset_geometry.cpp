#include "gqv/coset_geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace gqv::geom {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw GroupSpecError(msg); }

std::vector<std::vector<unsigned>> permutations_lex(unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<std::vector<unsigned>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

bool is_even_permutation(const std::vector<unsigned>& p) {
    unsigned inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

FiniteGroup from_permutations(std::vector<std::vector<unsigned>> perms,
                              std::string name) {
    const unsigned n = static_cast<unsigned>(perms.size());
    std::map<std::vector<unsigned>, unsigned> index;
    for (unsigned i = 0; i < n; ++i) index[perms[i]] = i;
    std::vector<unsigned> table(static_cast<size_t>(n) * n);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            // x -> b(a(x)): apply a first, matching right-action composition.
            std::vector<unsigned> c(perms[a].size());
            for (size_t x = 0; x < c.size(); ++x) c[x] = perms[b][perms[a][x]];
            auto it = index.find(c);
            if (it == index.end()) bad("permutation set not closed");
            table[static_cast<size_t>(a) * n + b] = it->second;
        }
    }
    return FiniteGroup::from_table(std::move(table), n, std::move(name));
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<unsigned> table, unsigned n,
                                    std::string name) {
    if (n == 0 || table.size() != static_cast<size_t>(n) * n)
        bad("multiplication table has wrong size");
    for (unsigned v : table)
        if (v >= n) bad("table entry out of range");

    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.name_ = std::move(name);

    // Identity.
    bool found = false;
    for (unsigned e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (unsigned x = 0; x < n && ok; ++x)
            ok = g.table_[e * n + x] == x && g.table_[x * n + e] == x;
        if (ok) {
            g.identity_ = e;
            found = true;
        }
    }
    if (!found) bad("table has no identity element");

    // Inverses.
    g.inverse_.assign(n, n);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            if (g.table_[a * n + b] == g.identity_ &&
                g.table_[b * n + a] == g.identity_) {
                g.inverse_[a] = b;
                break;
            }
        }
        if (g.inverse_[a] == n) bad("table element without inverse");
    }

    // Associativity: exhaustive for n <= 256, sampled triples above.
    auto assoc = [&](unsigned a, unsigned b, unsigned c) {
        return g.table_[g.table_[a * n + b] * n + c] ==
               g.table_[a * n + g.table_[b * n + c]];
    };
    if (n <= 256) {
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                for (unsigned c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) bad("table is not associative");
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<unsigned> pick(0, n - 1);
        for (unsigned long i = 0; i < static_cast<unsigned long>(n) * n; ++i)
            if (!assoc(pick(rng), pick(rng), pick(rng)))
                bad("table is not associative");
    }
    return g;
}

FiniteGroup cyclic(unsigned n) {
    if (n == 0) bad("cyclic group order must be positive");
    std::vector<unsigned> table(static_cast<size_t>(n) * n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return FiniteGroup::from_table(std::move(table), n,
                                   "cyclic(" + std::to_string(n) + ")");
}

FiniteGroup dihedral(unsigned n) {
    if (n < 1) bad("dihedral parameter must be >= 1");
    const unsigned m = 2 * n;
    // Elements 0..n-1: rotations r^i; n..2n-1: reflections s r^i.
    auto idx = [n](bool refl, unsigned i) { return (refl ? n : 0) + i % n; };
    std::vector<unsigned> table(static_cast<size_t>(m) * m);
    for (unsigned a = 0; a < m; ++a) {
        for (unsigned b = 0; b < m; ++b) {
            const bool ra = a >= n, rb = b >= n;
            const unsigned i = a % n, j = b % n;
            unsigned out;
            if (!ra && !rb) out = idx(false, i + j);
            else if (!ra && rb) out = idx(true, j + n - i % n);
            else if (ra && !rb) out = idx(true, i + j);
            else out = idx(false, j + n - i % n);
            table[static_cast<size_t>(a) * m + b] = out;
        }
    }
    return FiniteGroup::from_table(std::move(table), m,
                                   "dihedral(" + std::to_string(n) + ")");
}

FiniteGroup symmetric(unsigned n) {
    if (n < 1 || n > 6) bad("symmetric(n) supported for 1 <= n <= 6");
    return from_permutations(permutations_lex(n),
                             "symmetric(" + std::to_string(n) + ")");
}

FiniteGroup alternating(unsigned n) {
    if (n < 3 || n > 6) bad("alternating(n) supported for 3 <= n <= 6");
    std::vector<std::vector<unsigned>> evens;
    for (auto& p : permutations_lex(n))
        if (is_even_permutation(p)) evens.push_back(p);
    return from_permutations(std::move(evens),
                             "alternating(" + std::to_string(n) + ")");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const unsigned n = a.order() * b.order();
    std::vector<unsigned> table(static_cast<size_t>(n) * n);
    auto idx = [&](unsigned x, unsigned y) { return x * b.order() + y; };
    for (unsigned x1 = 0; x1 < a.order(); ++x1)
        for (unsigned y1 = 0; y1 < b.order(); ++y1)
            for (unsigned x2 = 0; x2 < a.order(); ++x2)
                for (unsigned y2 = 0; y2 < b.order(); ++y2)
                    table[static_cast<size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
    return FiniteGroup::from_table(std::move(table), n,
                                   a.name() + "*" + b.name());
}

FiniteGroup build_group(const std::string& spec, unsigned max_order) {
    std::vector<FiniteGroup> factors;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t star = spec.find('*', pos);
        const std::string term =
            spec.substr(pos, star == std::string::npos ? star : star - pos);
        auto open = term.find('(');
        auto close = term.rfind(')');
        if (open == std::string::npos || close != term.size() - 1)
            bad("malformed group term '" + term + "'");
        const std::string kind = term.substr(0, open);
        unsigned n = 0;
        try {
            n = static_cast<unsigned>(
                std::stoul(term.substr(open + 1, close - open - 1)));
        } catch (const std::exception&) {
            bad("malformed group parameter in '" + term + "'");
        }
        if (kind == "cyclic") factors.push_back(cyclic(n));
        else if (kind == "dihedral") factors.push_back(dihedral(n));
        else if (kind == "symmetric") factors.push_back(symmetric(n));
        else if (kind == "alternating") factors.push_back(alternating(n));
        else bad("unknown group constructor '" + kind + "'");
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    if (factors.empty()) bad("empty group spec");
    FiniteGroup g = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) {
        if (static_cast<unsigned long>(g.order()) * factors[i].order() >
            max_order)
            bad("group order exceeds the cap of " + std::to_string(max_order));
        g = direct_product(g, factors[i]);
    }
    if (g.order() > max_order)
        bad("group order exceeds the cap of " + std::to_string(max_order));
    return g;
}

std::vector<unsigned> subgroup_generated(const FiniteGroup& g,
                                         const std::vector<unsigned>& gens) {
    std::set<unsigned> elems = {g.identity()};
    std::vector<unsigned> queue = {g.identity()};
    for (unsigned x : gens) {
        if (x >= g.order()) bad("generator index out of range");
        if (elems.insert(x).second) queue.push_back(x);
    }
    while (!queue.empty()) {
        const unsigned x = queue.back();
        queue.pop_back();
        std::vector<unsigned> snapshot(elems.begin(), elems.end());
        for (unsigned y : snapshot) {
            for (unsigned z : {g.mul(x, y), g.mul(y, x)}) {
                if (elems.insert(z).second) queue.push_back(z);
            }
        }
    }
    return {elems.begin(), elems.end()};
}

std::vector<unsigned> parse_subset(const FiniteGroup& g,
                                   const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        bad("subset spec must be gen:... or set:...");
    const std::string kind = spec.substr(0, colon);
    std::vector<unsigned> items;
    std::string rest = spec.substr(colon + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t comma = rest.find(',', pos);
        const std::string tok =
            rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            items.push_back(static_cast<unsigned>(std::stoul(tok)));
        } catch (const std::exception&) {
            bad("malformed element index '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (unsigned x : items)
        if (x >= g.order()) bad("element index out of range");
    if (kind == "gen") return subgroup_generated(g, items);
    if (kind == "set") {
        std::set<unsigned> s(items.begin(), items.end());
        s.insert(g.identity());
        return {s.begin(), s.end()};
    }
    bad("unknown subset spec kind '" + kind + "'");
}

bool is_subgroup(const FiniteGroup& g, const std::vector<unsigned>& set) {
    std::set<unsigned> s(set.begin(), set.end());
    if (!s.count(g.identity())) return false;
    for (unsigned a : s)
        for (unsigned b : s)
            if (!s.count(g.mul(a, b))) return false;
    return true;
}

namespace {

std::vector<unsigned> sorted_unique(std::vector<unsigned> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_line_subgroups(const FiniteGroup& g,
                          const std::vector<std::vector<unsigned>>& subs) {
    if (subs.empty()) bad("at least one line subgroup is required");
    for (const auto& s : subs) {
        if (!is_subgroup(g, s))
            bad("line set is not a subgroup");
        if (s.size() < 2) bad("line subgroups must be non-trivial");
    }
    for (size_t i = 0; i < subs.size(); ++i) {
        for (size_t j = i + 1; j < subs.size(); ++j) {
            std::vector<unsigned> inter;
            std::set_intersection(subs[i].begin(), subs[i].end(),
                                  subs[j].begin(), subs[j].end(),
                                  std::back_inserter(inter));
            if (inter != std::vector<unsigned>{g.identity()})
                bad("two line subgroups share a non-identity element");
        }
    }
}

/// Runs the partial-linear-space and triangle checks on a geometry whose
/// points and lines are already in place.
void run_axiom_checks(IncidenceGeometry& geom) {
    // Common lines per point pair.
    std::map<std::pair<unsigned, unsigned>, std::vector<size_t>> pair_lines;
    for (size_t li = 0; li < geom.lines.size(); ++li) {
        const auto& line = geom.lines[li];
        for (size_t i = 0; i < line.size(); ++i)
            for (size_t j = i + 1; j < line.size(); ++j)
                pair_lines[{line[i], line[j]}].push_back(li);
    }
    geom.partial_linear = true;
    for (const auto& [pq, ls] : pair_lines) {
        if (ls.size() > 1) {
            geom.partial_linear = false;
            geom.pls_violation =
                PlsViolation{pq.first, pq.second, ls[0], ls[1]};
            break;
        }
    }

    // Triangles: three pairwise collinear points with no common line.
    auto collinear = [&](unsigned a, unsigned b) -> const std::vector<size_t>* {
        auto it = pair_lines.find({std::min(a, b), std::max(a, b)});
        return it == pair_lines.end() ? nullptr : &it->second;
    };
    geom.triangle_free = true;
    const auto& pts = geom.points;
    for (size_t i = 0; i < pts.size() && geom.triangle_free; ++i) {
        for (size_t j = i + 1; j < pts.size() && geom.triangle_free; ++j) {
            const auto* lij = collinear(pts[i], pts[j]);
            if (!lij) continue;
            for (size_t k = j + 1; k < pts.size(); ++k) {
                const auto* lik = collinear(pts[i], pts[k]);
                if (!lik) continue;
                const auto* ljk = collinear(pts[j], pts[k]);
                if (!ljk) continue;
                bool common = false;
                for (size_t l : *lij) {
                    const auto& line = geom.lines[l];
                    if (std::binary_search(line.begin(), line.end(), pts[k])) {
                        common = true;
                        break;
                    }
                }
                if (!common) {
                    geom.triangle_free = false;
                    geom.triangle = Triangle{pts[i], pts[j], pts[k]};
                    break;
                }
            }
        }
    }
}

}  // namespace

IncidenceGeometry coset_geometry(
    const FiniteGroup& g,
    const std::vector<std::vector<unsigned>>& line_subgroups) {
    std::vector<std::vector<unsigned>> subs;
    subs.reserve(line_subgroups.size());
    for (const auto& s : line_subgroups) subs.push_back(sorted_unique(s));
    check_line_subgroups(g, subs);

    std::set<std::vector<unsigned>> lineset;
    for (const auto& sub : subs) {
        for (unsigned x = 0; x < g.order(); ++x) {
            std::vector<unsigned> coset;
            coset.reserve(sub.size());
            for (unsigned h : sub) coset.push_back(g.mul(h, x));
            lineset.insert(sorted_unique(std::move(coset)));
        }
    }

    IncidenceGeometry geom;
    geom.points.resize(g.order());
    std::iota(geom.points.begin(), geom.points.end(), 0u);
    geom.lines.assign(lineset.begin(), lineset.end());
    run_axiom_checks(geom);
    return geom;
}

StabiliserReport line_stabiliser_check(const FiniteGroup& g,
                                       const IncidenceGeometry& geom,
                                       const std::vector<unsigned>& line) {
    StabiliserReport rep;
    rep.line = sorted_unique(line);
    const std::set<std::vector<unsigned>> lineset(geom.lines.begin(),
                                                  geom.lines.end());
    if (!lineset.count(rep.line)) bad("not a line of the geometry");
    if (!std::binary_search(rep.line.begin(), rep.line.end(), g.identity()))
        bad("line does not pass through the identity");

    // Stabiliser under right multiplication.
    for (unsigned m = 0; m < g.order(); ++m) {
        std::vector<unsigned> image;
        image.reserve(rep.line.size());
        for (unsigned x : rep.line) image.push_back(g.mul(x, m));
        if (sorted_unique(std::move(image)) == rep.line)
            rep.stabiliser.push_back(m);
    }
    rep.stab_nontrivial = rep.stabiliser.size() > 1;
    rep.stab_subset_line =
        std::includes(rep.line.begin(), rep.line.end(), rep.stabiliser.begin(),
                      rep.stabiliser.end());

    // Decompose the line into left stabiliser-cosets.
    std::set<unsigned> covered;
    rep.union_of_left_cosets = true;
    for (unsigned h : rep.line) {
        if (covered.count(h)) continue;
        std::vector<unsigned> coset;
        for (unsigned m : rep.stabiliser) coset.push_back(g.mul(h, m));
        coset = sorted_unique(std::move(coset));
        for (unsigned x : coset) {
            if (!std::binary_search(rep.line.begin(), rep.line.end(), x) ||
                covered.count(x)) {
                rep.union_of_left_cosets = false;
            }
            covered.insert(x);
        }
        rep.coset_decomposition.push_back(std::move(coset));
    }
    if (covered.size() != rep.line.size()) rep.union_of_left_cosets = false;

    // Left multiplications as collineations.
    rep.left_closure = true;
    for (unsigned m = 0; m < g.order() && rep.left_closure; ++m) {
        for (const auto& l : geom.lines) {
            std::vector<unsigned> image;
            image.reserve(l.size());
            for (unsigned x : l) image.push_back(g.mul(m, x));
            if (!lineset.count(sorted_unique(std::move(image)))) {
                rep.left_closure = false;
                break;
            }
        }
    }

    rep.triangle_free = geom.triangle_free;
    rep.hypotheses_met =
        rep.left_closure && rep.triangle_free && rep.stab_nontrivial;
    rep.stab_equals_line = rep.stabiliser == rep.line;
    rep.lemma_consistent = !rep.hypotheses_met || rep.stab_equals_line;
    return rep;
}

GridResult grid_subquadrangle(const FiniteGroup& g,
                              const std::vector<unsigned>& sub1,
                              const std::vector<unsigned>& sub2) {
    const auto l1 = sorted_unique(sub1);
    const auto l2 = sorted_unique(sub2);
    check_line_subgroups(g, {l1, l2});
    if (l1.size() != l2.size()) bad("grid subgroups must have equal order");
    const unsigned s1 = static_cast<unsigned>(l1.size());

    std::set<unsigned> productset;
    for (unsigned a : l1)
        for (unsigned b : l2) productset.insert(g.mul(a, b));
    if (productset.size() < static_cast<size_t>(s1) * s1)
        throw DegenerateProductError(
            "product set smaller than (s+1)^2; the product is not direct");

    GridResult res;
    res.s = s1 - 1;
    res.geometry.points.assign(productset.begin(), productset.end());

    std::set<std::vector<unsigned>> lineset;
    for (unsigned a : l1) {
        std::vector<unsigned> line;
        for (unsigned b : l2) line.push_back(g.mul(a, b));
        lineset.insert(sorted_unique(std::move(line)));
    }
    for (unsigned b : l2) {
        std::vector<unsigned> line;
        for (unsigned a : l1) line.push_back(g.mul(a, b));
        lineset.insert(sorted_unique(std::move(line)));
    }
    res.geometry.lines.assign(lineset.begin(), lineset.end());
    run_axiom_checks(res.geometry);

    // Every point on exactly two lines.
    std::map<unsigned, unsigned> degree;
    for (const auto& line : res.geometry.lines)
        for (unsigned p : line) ++degree[p];
    res.every_point_on_two_lines =
        std::all_of(res.geometry.points.begin(), res.geometry.points.end(),
                    [&](unsigned p) { return degree[p] == 2; });

    // Generalised quadrangle axiom over every non-incident point-line pair.
    res.gq_axiom = true;
    for (unsigned p : res.geometry.points) {
        for (const auto& line : res.geometry.lines) {
            if (std::binary_search(line.begin(), line.end(), p)) continue;
            unsigned meets = 0;
            for (unsigned q : line) {
                for (const auto& l2v : res.geometry.lines) {
                    if (std::binary_search(l2v.begin(), l2v.end(), p) &&
                        std::binary_search(l2v.begin(), l2v.end(), q)) {
                        ++meets;
                        break;
                    }
                }
            }
            if (meets != 1) {
                res.gq_axiom = false;
                break;
            }
        }
        if (!res.gq_axiom) break;
    }
    return res;
}

DoubleCosetProfile double_coset_profile(const FiniteGroup& g,
                                        const std::vector<unsigned>& sub1,
                                        const std::vector<unsigned>& sub2) {
    const auto l1 = sorted_unique(sub1);
    const auto l2 = sorted_unique(sub2);
    if (!is_subgroup(g, l1) || !is_subgroup(g, l2))
        bad("double cosets require subgroups");
    if (l1.size() != l2.size()) bad("subgroups must have equal order");
    {
        std::vector<unsigned> inter;
        std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(),
                              std::back_inserter(inter));
        if (inter != std::vector<unsigned>{g.identity()})
            bad("subgroups share a non-identity element");
    }

    DoubleCosetProfile prof;
    prof.partition_ok = true;
    prof.size_law_ok = true;
    std::vector<bool> seen(g.order(), false);
    std::size_t covered = 0;
    for (unsigned x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::set<unsigned> dc;
        for (unsigned a : l1)
            for (unsigned b : l2) dc.insert(g.mul(g.mul(a, x), b));
        for (unsigned y : dc) {
            if (seen[y]) prof.partition_ok = false;
            seen[y] = true;
        }
        covered += dc.size();
        prof.sizes.push_back(dc.size());

        // |L1 x L2| = |L1| |L2| / |L2 ∩ x^-1 L1 x|.
        std::set<unsigned> conj;
        const unsigned xi = g.inverse(x);
        for (unsigned a : l1) conj.insert(g.mul(g.mul(xi, a), x));
        std::size_t inter = 0;
        for (unsigned b : l2)
            if (conj.count(b)) ++inter;
        if (dc.size() * inter != l1.size() * l2.size())
            prof.size_law_ok = false;
    }
    if (covered != g.order()) prof.partition_ok = false;
    return prof;
}

}  // namespace gqv::geom
