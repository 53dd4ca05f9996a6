#include "repstab/dkconfig.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>

namespace repstab {

int DKAlgebra::letter(int i, int j) const {
    if (i < 0 || j >= k || i >= j) {
        throw Error(ErrorCode::InvalidArgument, "B_" + std::to_string(i + 1) + std::to_string(j + 1) + " is not a generator");
    }
    return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> DKAlgebra::points(int letter) const {
    int i = 0;
    while (letter >= k - 1 - i) {
        letter -= k - 1 - i;
        ++i;
    }
    return {i, i + 1 + letter};
}

namespace {

// Signed letter for B_xy with x != y in either order.
std::pair<int, int> oriented(const DKAlgebra& alg, int x, int y) {
    if (x < y) return {alg.letter(x, y), 1};
    return {alg.letter(y, x), alg.parity == Parity::odd ? -1 : 1};
}

TensorPoly generator(int letter, int sign = 1) { return TensorPoly{{Word{letter}, Rational(sign)}}; }

void add_into(TensorPoly& target, const TensorPoly& source) {
    for (const auto& [w, c] : source) {
        auto [it, inserted] = target.try_emplace(w, 0);
        it->second += c;
        if (it->second == 0) target.erase(it);
    }
}

}  // namespace

std::vector<TensorPoly> DKAlgebra::relators() const {
    const FreeLieAlgebra free(generator_count(), parity);
    std::vector<TensorPoly> out;
    const int g = generator_count();
    for (int a = 0; a < g; ++a) {
        for (int b = a + 1; b < g; ++b) {
            auto [i, j] = points(a);
            auto [s, t] = points(b);
            if (i != s && i != t && j != s && j != t) out.push_back(free.bracket(generator(a), 1, generator(b), 1));
        }
    }
    // [B_ij, B_it + B_jt] for i < j and t distinct from both.
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            for (int t = 0; t < k; ++t) {
                if (t == i || t == j) continue;
                auto [l1, s1] = oriented(*this, i, t);
                auto [l2, s2] = oriented(*this, j, t);
                TensorPoly sum = generator(l1, s1);
                add_into(sum, generator(l2, s2));
                out.push_back(free.bracket(generator(letter(i, j)), 1, sum, 1));
            }
        }
    }
    return out;
}

namespace {

void check_scale(int k, int weight) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "number of points must be non-negative");
    if (weight < 1) throw Error(ErrorCode::InvalidArgument, "Lie weight must be at least 1");
    if (k > max_dk_points || weight > max_dk_weight) {
        throw Error(ErrorCode::ScaleExceeded, "Drinfeld-Kohno pieces are limited to k <= " + std::to_string(max_dk_points) +
                                                  " and weight <= " + std::to_string(max_dk_weight));
    }
}

unsigned word_support(const Word& w, const std::vector<unsigned>& letter_mask) {
    unsigned mask = 0;
    for (int l : w) mask |= letter_mask[static_cast<std::size_t>(l)];
    return mask;
}

struct ComponentBuilder {
    DKAlgebra alg;
    int weight;
    FreeLieAlgebra free;
    std::vector<unsigned> letter_mask;
    unsigned full;
    std::map<Word, int> column;
    std::vector<Word> column_word;
    linalg::EchelonBasis ideal;

    ComponentBuilder(int s, Parity parity, int w)
        : alg{s, parity}, weight(w), free(alg.generator_count(), parity), full((1u << s) - 1) {
        for (int l = 0; l < alg.generator_count(); ++l) {
            auto [i, j] = alg.points(l);
            letter_mask.push_back((1u << i) | (1u << j));
        }
        for (const auto& e : free.basis(weight)) {
            Word lead = e.leading_word();
            if (word_support(lead, letter_mask) != full) continue;
            column.emplace(lead, static_cast<int>(column_word.size()));
            column_word.push_back(std::move(lead));
        }
    }

    linalg::SparseVector to_columns(const TensorPoly& p) const {
        std::map<int, Rational> entries;
        for (auto& [word, c] : free.coordinates(p)) {
            auto it = column.find(word);
            if (it == column.end()) throw Error(ErrorCode::InvariantViolation, "bracket left its support component");
            entries[it->second] = c;
        }
        return linalg::from_map(entries);
    }

    // Inserts every [..[[r, x1], x2] .., x_t] whose indices cover the whole support.
    void extend(const TensorPoly& p, int w, unsigned mask) {
        if (ideal.rank() == column_word.size()) return;
        const int steps = weight - w;
        if (std::popcount(full & ~mask) > 2 * steps) return;
        if (steps == 0) {
            if (mask == full) ideal.insert(to_columns(p));
            return;
        }
        for (int x = 0; x < alg.generator_count(); ++x) {
            extend(free.bracket(p, w, generator(x), 1), w + 1, mask | letter_mask[static_cast<std::size_t>(x)]);
        }
    }

    SupportComponent build() {
        SupportComponent comp;
        comp.s = alg.k;
        comp.parity = alg.parity;
        comp.weight = weight;
        comp.free_dimension = column_word.size();
        if (weight >= 2 && !column_word.empty()) {
            for (const auto& r : alg.relators()) {
                const unsigned mask = word_support(r.begin()->first, letter_mask);
                extend(r, 2, mask);
            }
        }
        comp.ideal_rank = ideal.rank();
        std::vector<int> quotient_columns;
        for (std::size_t c = 0; c < column_word.size(); ++c) {
            if (!ideal.is_pivot(static_cast<int>(c))) {
                quotient_columns.push_back(static_cast<int>(c));
                comp.basis.push_back(column_word[c]);
            }
        }
        const auto& classes = conjugacy_classes(alg.k);
        comp.character = CharacterVector::zero(alg.k);
        for (std::size_t cls = 0; cls < classes.classes.size(); ++cls) {
            const auto sigma = permutation_of_type(alg.k, classes.classes[cls].cycle_type);
            std::vector<int> letter_map, letter_sign;
            for (int l = 0; l < alg.generator_count(); ++l) {
                auto [i, j] = alg.points(l);
                auto [image, sign] =
                    oriented(alg, sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
                letter_map.push_back(image);
                letter_sign.push_back(sign);
            }
            Rational trace = 0;
            for (int col : quotient_columns) {
                const auto image = relabel(free.polynomial(free.element_for(column_word[static_cast<std::size_t>(col)])),
                                           letter_map, letter_sign);
                for (const auto& [c, value] : ideal.reduce(to_columns(image))) {
                    if (c == col) trace += value;
                }
            }
            comp.character.values[cls] = trace;
        }
        return comp;
    }
};

}  // namespace

const SupportComponent& dk_support_component(int s, Parity parity, int weight) {
    if (s < 0 || weight < 1) throw Error(ErrorCode::InvalidArgument, "support size and weight must be positive");
    static std::mutex mutex;
    static std::map<std::tuple<int, Parity, int>, std::unique_ptr<SupportComponent>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{s, parity, weight}];
    if (!slot) slot = std::make_unique<SupportComponent>(ComponentBuilder(s, parity, weight).build());
    return *slot;
}

SymRep dk_character(int k, Parity parity, int weight) {
    check_scale(k, weight);
    SymRep out(k);
    for (int s = 2; s <= std::min(k, 2 * weight); ++s) {
        const auto& comp = dk_support_component(s, parity, weight);
        if (comp.basis.empty()) continue;
        out = out + induce_with_trivial(decompose_character(comp.character), k);
    }
    return out;
}

CharacterVector dk_character_vector(int k, Parity parity, int weight) { return dk_character(k, parity, weight).character(); }

BigInt dk_dimension(int k, Parity parity, int weight) {
    check_scale(k, weight);
    BigInt dim = 0;
    for (int s = 2; s <= std::min(k, 2 * weight); ++s) dim += binomial(k, s) * static_cast<long>(dk_support_component(s, parity, weight).basis.size());
    return dim;
}

namespace {

std::string format_tree(const BracketTree& t, const DKAlgebra& alg) {
    if (t.is_letter()) {
        auto [i, j] = alg.points(t.letter_index());
        return "B" + std::to_string(i + 1) + std::to_string(j + 1);
    }
    return "[" + format_tree(t.left(), alg) + "," + format_tree(t.right(), alg) + "]";
}

void for_each_subset(int k, int s, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(current.size()) == s) {
            visit(current);
            return;
        }
        for (int p = next; p < k; ++p) {
            current.push_back(p);
            rec(p + 1);
            current.pop_back();
        }
    };
    rec(0);
}

}  // namespace

DKGradedPiece dk_graded_basis(int k, Parity parity, int weight) {
    check_scale(k, weight);
    DKGradedPiece piece;
    piece.k = k;
    piece.parity = parity;
    piece.weight = weight;
    const DKAlgebra big{k, parity};
    const FreeLieAlgebra free(big.generator_count(), parity);
    for (int s = 2; s <= std::min(k, 2 * weight); ++s) {
        const auto& comp = dk_support_component(s, parity, weight);
        if (comp.basis.empty()) continue;
        const DKAlgebra small{s, parity};
        // Order-preserving relabelling {0..s-1} -> S keeps pairs in order, so no signs.
        for_each_subset(k, s, [&](const std::vector<int>& subset) {
            std::vector<int> letter_map;
            for (int l = 0; l < small.generator_count(); ++l) {
                auto [i, j] = small.points(l);
                letter_map.push_back(big.letter(subset[static_cast<std::size_t>(i)], subset[static_cast<std::size_t>(j)]));
            }
            for (const auto& word : comp.basis) {
                Word image(word.size());
                for (std::size_t t = 0; t < word.size(); ++t) image[t] = letter_map[static_cast<std::size_t>(word[t])];
                piece.basis.push_back(format_tree(free.tree(free.element_for(image)), big));
            }
        });
    }
    piece.action = dk_character(k, parity, weight);
    return piece;
}

GeneratorMultiset dk_generators(Parity parity, int weight) {
    GeneratorMultiset gens;
    for (int s = 2; s <= std::min(max_dk_points, 2 * weight); ++s) {
        const auto& comp = dk_support_component(s, parity, weight);
        if (comp.basis.empty()) continue;
        const SymRep rep = decompose_character(comp.character);
        for (const auto& [lambda, mult] : rep.multiplicities()) gens[lambda] += mult;
    }
    return gens;
}

int minimal_dimension(Parity parity) { return parity == Parity::even ? 4 : 3; }

int homotopy_degree(int n, int weight) { return weight * (n - 2) + 1; }

FIModuleTable homotopy_fi_module(Parity parity, int weight, int k_max) {
    check_scale(k_max, weight);
    std::vector<SymRep> levels;
    for (int k = 0; k <= k_max; ++k) levels.push_back(dk_character(k, parity, weight));
    const int n = minimal_dimension(parity);
    TableMetadata meta;
    meta.notes["side"] = "homotopy";
    meta.notes["parity"] = to_string(parity);
    meta.notes["lie_weight"] = std::to_string(weight);
    meta.notes["i"] = "m(n-2)+1 = " + std::to_string(homotopy_degree(n, weight)) + " at n = " + std::to_string(n);
    return FIModuleTable("pi_" + std::string(to_string(parity)) + "(m=" + std::to_string(weight) + ")", true,
                         std::move(levels), std::move(meta));
}

namespace {

using Monomial = std::vector<std::pair<int, int>>;

// Straightens a product of omegas into admissible monomials: factors sorted by larger
// index, no two with the same larger index. omega_ji = (-1)^n omega_ij, factors
// commute up to (-1)^(n-1), and omega_ik omega_jk = omega_ij omega_jk - omega_ij omega_ik.
void straighten(Monomial mono, long coeff, Parity parity, std::map<Monomial, long>& out) {
    if (coeff == 0) return;
    for (auto& f : mono) {
        if (f.first == f.second) return;
        if (f.first > f.second) {
            std::swap(f.first, f.second);
            if (parity == Parity::odd) coeff = -coeff;
        }
    }
    const long swap_sign = parity == Parity::even ? -1 : 1;
    auto key = [](const std::pair<int, int>& f) { return std::make_pair(f.second, f.first); };
    for (std::size_t pass = 0; pass < mono.size(); ++pass) {
        for (std::size_t i = 0; i + 1 < mono.size(); ++i) {
            if (key(mono[i + 1]) < key(mono[i])) {
                std::swap(mono[i], mono[i + 1]);
                coeff *= swap_sign;
            } else if (mono[i] == mono[i + 1]) {
                return;
            }
        }
    }
    for (std::size_t i = 0; i + 1 < mono.size(); ++i) {
        if (mono[i] == mono[i + 1]) return;
        if (mono[i].second != mono[i + 1].second) continue;
        const int a = mono[i].first, b = mono[i + 1].first, c = mono[i].second;
        Monomial first = mono, second = mono;
        first[i] = {a, b};
        first[i + 1] = {b, c};
        second[i] = {a, b};
        second[i + 1] = {a, c};
        straighten(std::move(first), coeff, parity, out);
        straighten(std::move(second), -coeff, parity, out);
        return;
    }
    auto [it, inserted] = out.try_emplace(mono, 0);
    it->second += coeff;
    if (it->second == 0) out.erase(it);
}

std::vector<Monomial> admissible_monomials(int k, int j) {
    std::vector<Monomial> out;
    Monomial current;
    std::function<void(int)> rec = [&](int next_larger) {
        if (static_cast<int>(current.size()) == j) {
            out.push_back(current);
            return;
        }
        for (int b = next_larger; b < k; ++b) {
            for (int a = 0; a < b; ++a) {
                current.emplace_back(a, b);
                rec(b + 1);
                current.pop_back();
            }
        }
    };
    rec(1);
    return out;
}

}  // namespace

ArnoldPiece arnold_character(int k, Parity parity, int j) {
    if (k < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "k and j must be non-negative");
    if (k > max_dk_points || j > max_arnold_degree) {
        throw Error(ErrorCode::ScaleExceeded, "Arnold pieces are limited to k <= " + std::to_string(max_dk_points) +
                                                  " and degree <= " + std::to_string(max_arnold_degree));
    }
    ArnoldPiece piece;
    piece.k = k;
    piece.parity = parity;
    piece.j = j;
    piece.basis = admissible_monomials(k, j);
    const auto& classes = conjugacy_classes(k);
    CharacterVector chi = CharacterVector::zero(k);
    for (std::size_t cls = 0; cls < classes.classes.size(); ++cls) {
        const auto sigma = permutation_of_type(k, classes.classes[cls].cycle_type);
        long trace = 0;
        for (const auto& mono : piece.basis) {
            Monomial image = mono;
            for (auto& f : image) f = {sigma[static_cast<std::size_t>(f.first)], sigma[static_cast<std::size_t>(f.second)]};
            std::map<Monomial, long> normal;
            straighten(std::move(image), 1, parity, normal);
            auto it = normal.find(mono);
            if (it != normal.end()) trace += it->second;
        }
        chi.values[cls] = trace;
    }
    piece.action = decompose_character(chi);
    return piece;
}

FIModuleTable cohomology_fi_module(Parity parity, int j, int k_max) {
    std::vector<SymRep> levels;
    for (int k = 0; k <= k_max; ++k) levels.push_back(arnold_character(k, parity, j).action);
    const int n = minimal_dimension(parity);
    TableMetadata meta;
    meta.notes["side"] = "cohomology";
    meta.notes["parity"] = to_string(parity);
    meta.notes["i"] = "j(n-1) = " + std::to_string(j * (n - 1)) + " at n = " + std::to_string(n);
    return FIModuleTable("H_" + std::string(to_string(parity)) + "(j=" + std::to_string(j) + ")", true,
                         std::move(levels), std::move(meta));
}

SymRep loop_homology_piece(int k, Parity parity, int t) {
    if (t < 0) throw Error(ErrorCode::InvalidArgument, "loop weight must be non-negative");
    if (t > max_dk_weight) check_scale(k, t);
    const auto& classes = conjugacy_classes(k);
    const CharacterVector one{k, std::vector<Rational>(classes.classes.size(), Rational(1))};
    std::vector<CharacterVector> by_weight(static_cast<std::size_t>(t) + 1, CharacterVector::zero(k));
    by_weight[0] = one;
    for (int w = 1; w <= t; ++w) {
        const CharacterVector lie = dk_character_vector(k, parity, w);
        // the weight-w piece sits in degree w(n-2), whose parity is w times that of n
        const Parity piece_parity = (parity == Parity::odd && w % 2 == 1) ? Parity::odd : Parity::even;
        std::vector<CharacterVector> next(by_weight.size(), CharacterVector::zero(k));
        for (int total = 0; total <= t; ++total) {
            for (int j = 0; j * w <= total; ++j) {
                next[static_cast<std::size_t>(total)] =
                    next[static_cast<std::size_t>(total)] +
                    by_weight[static_cast<std::size_t>(total - j * w)] * graded_power_character(lie, j, piece_parity);
            }
        }
        by_weight = std::move(next);
    }
    return decompose_character(by_weight.back());
}

FIModuleTable loop_fi_module(Parity parity, int t, int k_max) {
    std::vector<SymRep> levels;
    for (int k = 0; k <= k_max; ++k) levels.push_back(loop_homology_piece(k, parity, t));
    const int n = minimal_dimension(parity);
    TableMetadata meta;
    meta.notes["side"] = "loop";
    meta.notes["parity"] = to_string(parity);
    meta.notes["i"] = "t(n-2) = " + std::to_string(t * (n - 2)) + " at n = " + std::to_string(n);
    return FIModuleTable("H_*(Omega)_" + std::string(to_string(parity)) + "(t=" + std::to_string(t) + ")", true,
                         std::move(levels), std::move(meta));
}

BigInt loop_series_coefficient(int k, int t) {
    if (t < 0) return 0;
    // complete homogeneous symmetric polynomial h_t(1, ..., k-1)
    std::vector<BigInt> h(static_cast<std::size_t>(t) + 1, BigInt(0));
    h[0] = 1;
    for (int j = 1; j < k; ++j)
        for (int d = 1; d <= t; ++d) h[static_cast<std::size_t>(d)] += j * h[static_cast<std::size_t>(d) - 1];
    return h.back();
}

std::vector<BigInt> pbw_primitives(const std::vector<BigInt>& series, Parity parity) {
    if (series.empty() || series[0] != 1) throw Error(ErrorCode::InvalidArgument, "series must start with 1");
    const int top = static_cast<int>(series.size()) - 1;
    std::vector<BigInt> product(series.size(), BigInt(0));
    product[0] = 1;
    std::vector<BigInt> primitives(series.size(), BigInt(0));
    for (int w = 1; w <= top; ++w) {
        const BigInt a = series[static_cast<std::size_t>(w)] - product[static_cast<std::size_t>(w)];
        if (a < 0) throw Error(ErrorCode::InvariantViolation, "series is not the Hilbert series of an enveloping algebra");
        primitives[static_cast<std::size_t>(w)] = a;
        if (a == 0) continue;
        const bool exterior = parity == Parity::odd && w % 2 == 1;
        const long count = to_int64(a);
        // multiply by (1 + u^w)^a or (1 - u^w)^{-a}
        std::vector<BigInt> factor(series.size(), BigInt(0));
        for (int r = 0; r * w <= top; ++r)
            factor[static_cast<std::size_t>(r * w)] = exterior ? binomial(count, r) : binomial(count + r - 1, r);
        std::vector<BigInt> next(series.size(), BigInt(0));
        for (int x = 0; x <= top; ++x)
            for (int y = 0; x + y <= top; ++y)
                next[static_cast<std::size_t>(x + y)] += product[static_cast<std::size_t>(x)] * factor[static_cast<std::size_t>(y)];
        product = std::move(next);
    }
    return primitives;
}

bool ConfigRangeReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const RangeCheck& c) { return c.passed; });
}

ConfigRangeReport verify_config_ranges(Parity parity, int m_max, int k_max) {
    ConfigRangeReport report;
    report.parity = parity;
    report.m_max = m_max;
    report.k_max = k_max;
    const int n = minimal_dimension(parity);
    for (int m = 1; m <= m_max; ++m) {
        RangeCheck c;
        c.side = "homotopy";
        c.degree_index = m;
        c.n = n;
        c.i = homotopy_degree(n, m);
        const auto table = homotopy_fi_module(parity, m, k_max);
        c.weight = weight_of(table).weight;
        c.weight_bound = 2 * (c.i - 1);
        c.onset_bound = 4 * (c.i - 1);
        c.onset_bound_strong = 2 * (c.i - 1);
        const auto rs = check_uniform_repstab(table, *c.onset_bound);
        c.onset = rs.onset;
        c.onset_defined_labels = rs.onset_defined_labels;
        const bool weight_ok = c.weight <= c.weight_bound;
        const bool onset_ok = rs.onset <= *c.onset_bound;
        const bool strong_ok = rs.onset_defined_labels <= *c.onset_bound_strong;
        c.passed = weight_ok && onset_ok && strong_ok;
        c.detail = "weight " + std::to_string(c.weight) + " <= " + std::to_string(c.weight_bound) + (weight_ok ? "" : " FAILS") +
                   "; onset " + std::to_string(rs.onset) + " <= " + std::to_string(*c.onset_bound) + (onset_ok ? "" : " FAILS") +
                   "; onset on defined labels " + std::to_string(rs.onset_defined_labels) + " <= " +
                   std::to_string(*c.onset_bound_strong) + (strong_ok ? "" : " FAILS");
        report.checks.push_back(std::move(c));
    }
    for (int j = 1; j <= std::min(m_max, max_arnold_degree); ++j) {
        RangeCheck c;
        c.side = "cohomology";
        c.degree_index = j;
        c.n = n;
        c.i = j * (n - 1);
        c.weight = weight_of(cohomology_fi_module(parity, j, k_max)).weight;
        c.weight_bound = c.i;
        c.passed = c.weight <= c.weight_bound;
        c.detail = "weight " + std::to_string(c.weight) + " <= i = " + std::to_string(c.i) + (c.passed ? "" : " FAILS");
        report.checks.push_back(std::move(c));
    }
    for (int t = 1; t <= std::min(m_max, max_dk_weight); ++t) {
        RangeCheck c;
        c.side = "loop";
        c.degree_index = t;
        c.n = n;
        c.i = t * (n - 2);
        const auto table = loop_fi_module(parity, t, k_max);
        c.weight = weight_of(table).weight;
        c.weight_bound = 2 * c.i;  // H^i of F_k(R^n) has weight <= i, so c_1 = 1
        bool dims_ok = true;
        for (int k = 0; k <= k_max; ++k)
            dims_ok = dims_ok && table.level(k).dimension() == loop_series_coefficient(k, t);
        c.passed = c.weight <= c.weight_bound && dims_ok;
        c.detail = "weight " + std::to_string(c.weight) + " <= 2i = " + std::to_string(c.weight_bound) +
                   (c.weight <= c.weight_bound ? "" : " FAILS") + (dims_ok ? "; dimensions match prod (1-ju)^-1" : "; dimension mismatch");
        report.checks.push_back(std::move(c));
    }
    return report;
}

}  // namespace repstab
