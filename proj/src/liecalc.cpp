#include "repstab/liecalc.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace repstab {

void GeneratorSet::validate() const {
    if (count < 0) throw Error(ErrorCode::InvalidArgument, "generator count must be non-negative");
    if (degree < 2) throw Error(ErrorCode::InvalidArgument, "generator degree d must be at least 2");
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    const std::size_t n = w.size();
    for (std::size_t i = 1; i < n; ++i) {
        // rotation starting at i must be strictly greater than w
        for (std::size_t k = 0; k < n; ++k) {
            const int a = w[(i + k) % n];
            const int b = w[k];
            if (a > b) break;
            if (a < b) return false;
            if (k + 1 == n) return false;  // equal rotation: periodic
        }
    }
    return true;
}

std::vector<Word> lyndon_words(int alphabet, int length) {
    std::vector<Word> out;
    if (alphabet <= 0 || length <= 0) return out;
    // Duval's generation of all Lyndon words of length <= n in lexicographic order.
    Word w{-1};
    while (!w.empty()) {
        ++w.back();
        const std::size_t m = w.size();
        if (static_cast<int>(m) == length) out.push_back(w);
        while (static_cast<int>(w.size()) < length) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == alphabet - 1) w.pop_back();
    }
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (is_lyndon(suffix)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), suffix};
    }
    throw Error(ErrorCode::InvalidArgument, "word of length < 2 has no standard factorization");
}

Word LieBasisElement::leading_word() const {
    if (!square) return word;
    Word out = word;
    out.insert(out.end(), word.begin(), word.end());
    return out;
}

BracketTree BracketTree::letter(int index) {
    if (index < 0) throw Error(ErrorCode::InvalidArgument, "generator index must be non-negative");
    auto node = std::make_shared<Node>();
    node->letter = index;
    return BracketTree(std::move(node));
}

BracketTree BracketTree::bracket(BracketTree left, BracketTree right) {
    auto node = std::make_shared<Node>();
    node->weight = left.weight() + right.weight();
    node->left = std::move(left.node_);
    node->right = std::move(right.node_);
    return BracketTree(std::move(node));
}

std::string BracketTree::to_string() const {
    if (is_letter()) return "x" + std::to_string(letter_index() + 1);
    return "[" + left().to_string() + "," + right().to_string() + "]";
}

namespace {

class ExpressionParser {
public:
    explicit ExpressionParser(const std::string& text) : s_(text) {}

    LieExpression parse() {
        LieExpression expr;
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        bool first = true;
        while (pos_ < s_.size()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Rational coeff = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = rational();
                skip();
                if (peek() != '*') fail("expected '*' after coefficient");
                ++pos_;
                skip();
            }
            expr.terms.emplace_back(sign * coeff, atom());
            skip();
        }
        return expr;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    long integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        if (pos_ - start > 9) fail("number too long");
        return std::stol(s_.substr(start, pos_ - start));
    }
    Rational rational() {
        Rational q(integer());
        if (peek() == '/') {
            ++pos_;
            const long den = integer();
            if (den == 0) fail("zero denominator");
            q /= den;
        }
        return q;
    }
    BracketTree atom() {
        skip();
        if (peek() == 'x') {
            ++pos_;
            const long index = integer();
            if (index < 1) fail("generators are numbered from x1");
            return BracketTree::letter(static_cast<int>(index - 1));
        }
        if (peek() != '[') fail("expected 'x' or '['");
        ++pos_;
        BracketTree left = atom();
        skip();
        if (peek() != ',') fail("expected ','");
        ++pos_;
        BracketTree right = atom();
        skip();
        if (peek() != ']') fail("expected ']'");
        ++pos_;
        return BracketTree::bracket(std::move(left), std::move(right));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

void add_scaled(TensorPoly& target, const TensorPoly& source, const Rational& factor) {
    for (const auto& [word, value] : source) {
        auto [it, inserted] = target.try_emplace(word, 0);
        it->second += factor * value;
        if (it->second == 0) target.erase(it);
    }
}

}  // namespace

LieExpression LieExpression::parse(const std::string& text) { return ExpressionParser(text).parse(); }

FreeLieAlgebra::FreeLieAlgebra(int alphabet, Parity parity) : alphabet_(alphabet), parity_(parity) {
    if (alphabet < 0) throw Error(ErrorCode::InvalidArgument, "alphabet size must be non-negative");
}

std::vector<LieBasisElement> FreeLieAlgebra::basis(int weight) const {
    std::vector<LieBasisElement> out;
    for (auto& w : lyndon_words(alphabet_, weight)) out.push_back({std::move(w), false});
    if (parity_ == Parity::odd && weight % 2 == 0 && (weight / 2) % 2 == 1) {
        for (auto& w : lyndon_words(alphabet_, weight / 2)) out.push_back({std::move(w), true});
    }
    std::sort(out.begin(), out.end(),
              [](const LieBasisElement& a, const LieBasisElement& b) { return a.leading_word() < b.leading_word(); });
    return out;
}

bool FreeLieAlgebra::is_leading_word(const Word& w) const {
    if (is_lyndon(w)) return true;
    if (parity_ != Parity::odd || w.size() % 2 != 0) return false;
    const std::size_t half = w.size() / 2;
    if (half % 2 != 1) return false;
    if (!std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(half), w.begin() + static_cast<std::ptrdiff_t>(half)))
        return false;
    return is_lyndon(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(half)));
}

LieBasisElement FreeLieAlgebra::element_for(const Word& leading) const {
    if (is_lyndon(leading)) return {leading, false};
    if (!is_leading_word(leading)) throw Error(ErrorCode::InvalidArgument, "not the leading word of a basis element");
    return {Word(leading.begin(), leading.begin() + static_cast<std::ptrdiff_t>(leading.size() / 2)), true};
}

BracketTree FreeLieAlgebra::tree(const LieBasisElement& e) const {
    if (e.square) {
        BracketTree half = tree({e.word, false});
        return BracketTree::bracket(half, half);
    }
    if (e.word.size() == 1) return BracketTree::letter(e.word.front());
    auto [u, v] = standard_factorization(e.word);
    return BracketTree::bracket(tree({u, false}), tree({v, false}));
}

TensorPoly FreeLieAlgebra::bracket(const TensorPoly& a, int weight_a, const TensorPoly& b, int weight_b) const {
    const bool anti = !(parity_ == Parity::odd && weight_a % 2 == 1 && weight_b % 2 == 1);
    TensorPoly out;
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            Word vu = v;
            vu.insert(vu.end(), u.begin(), u.end());
            const Rational c = cu * cv;
            auto [it1, in1] = out.try_emplace(std::move(uv), 0);
            it1->second += c;
            if (it1->second == 0) out.erase(it1);
            auto [it2, in2] = out.try_emplace(std::move(vu), 0);
            it2->second += anti ? Rational(-c) : c;
            if (it2->second == 0) out.erase(it2);
        }
    }
    return out;
}

TensorPoly FreeLieAlgebra::polynomial(const BracketTree& t) const {
    if (t.is_letter()) {
        if (t.letter_index() >= alphabet_) {
            throw Error(ErrorCode::InvalidArgument, "generator x" + std::to_string(t.letter_index() + 1) +
                                                        " outside an alphabet of " + std::to_string(alphabet_));
        }
        return TensorPoly{{Word{t.letter_index()}, Rational(1)}};
    }
    return bracket(polynomial(t.left()), t.left().weight(), polynomial(t.right()), t.right().weight());
}

TensorPoly FreeLieAlgebra::polynomial(const LieBasisElement& e) const { return cached_polynomial(e.leading_word()); }

const TensorPoly& FreeLieAlgebra::cached_polynomial(const Word& leading) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(leading);
        if (it != cache_.end()) return *it->second;
    }
    auto poly = std::make_shared<const TensorPoly>(polynomial(tree(element_for(leading))));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(leading, std::move(poly));
    return *it->second;
}

std::map<Word, Rational> FreeLieAlgebra::coordinates(TensorPoly p) const {
    std::map<Word, Rational> coords;
    while (!p.empty()) {
        const Word lead = p.begin()->first;
        if (!is_leading_word(lead)) {
            throw Error(ErrorCode::InvariantViolation, "polynomial is not a Lie element (stray leading word)");
        }
        const TensorPoly& basis_poly = cached_polynomial(lead);
        const Rational c = p.begin()->second / basis_poly.at(lead);
        coords[lead] = c;
        add_scaled(p, basis_poly, -c);
    }
    return coords;
}

Rational FreeLieAlgebra::coefficient(TensorPoly p, const Word& leading) const {
    while (!p.empty()) {
        const Word& lead = p.begin()->first;
        if (leading < lead) return 0;
        if (!is_leading_word(lead)) {
            throw Error(ErrorCode::InvariantViolation, "polynomial is not a Lie element (stray leading word)");
        }
        const TensorPoly& basis_poly = cached_polynomial(lead);
        const Rational c = p.begin()->second / basis_poly.at(lead);
        if (lead == leading) return c;
        add_scaled(p, basis_poly, -c);
    }
    return 0;
}

TensorPoly relabel(const TensorPoly& p, const std::vector<int>& letter_map, const std::vector<int>& letter_sign) {
    TensorPoly out;
    for (const auto& [word, value] : p) {
        Word image(word.size());
        int sign = 1;
        for (std::size_t i = 0; i < word.size(); ++i) {
            image[i] = letter_map[static_cast<std::size_t>(word[i])];
            if (!letter_sign.empty()) sign *= letter_sign[static_cast<std::size_t>(word[i])];
        }
        auto [it, inserted] = out.try_emplace(std::move(image), 0);
        it->second += sign * value;
        if (it->second == 0) out.erase(it);
    }
    return out;
}

namespace {

std::shared_ptr<const FreeLieAlgebra> shared_algebra(int alphabet, Parity parity) {
    static std::mutex mutex;
    static std::map<std::pair<int, Parity>, std::shared_ptr<const FreeLieAlgebra>> algebras;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = algebras[{alphabet, parity}];
    if (!slot) slot = std::make_shared<const FreeLieAlgebra>(alphabet, parity);
    return slot;
}

}  // namespace

LieBasis lie_basis(const GeneratorSet& gens, int weight) {
    gens.validate();
    if (weight < 1) throw Error(ErrorCode::InvalidArgument, "Lie weight must be at least 1");
    return {gens, weight, shared_algebra(gens.count, gens.effective_parity())->basis(weight)};
}

std::map<Word, Rational> bracket_expand(const GeneratorSet& gens, const LieExpression& expr) {
    gens.validate();
    if (expr.terms.empty()) return {};
    const int weight = expr.terms.front().second.weight();
    for (const auto& [c, t] : expr.terms) {
        if (t.weight() != weight) {
            throw Error(ErrorCode::NonHomogeneous, "terms of weight " + std::to_string(weight) + " and " +
                                                       std::to_string(t.weight()) + " in one expression");
        }
    }
    auto algebra = shared_algebra(gens.count, gens.effective_parity());
    TensorPoly total;
    for (const auto& [c, t] : expr.terms) add_scaled(total, algebra->polynomial(t), c);
    return algebra->coordinates(std::move(total));
}

CharacterVector lie_character_vector(const GeneratorSet& gens, int weight) {
    gens.validate();
    if (gens.count > max_lie_generators || weight > max_lie_weight) {
        throw Error(ErrorCode::ScaleExceeded, "Lie characters are limited to n <= " + std::to_string(max_lie_generators) +
                                                  " generators and weight <= " + std::to_string(max_lie_weight));
    }
    if (weight < 1) throw Error(ErrorCode::InvalidArgument, "Lie weight must be at least 1");
    const int n = gens.count;
    auto algebra = shared_algebra(n, gens.effective_parity());
    const auto basis = algebra->basis(weight);
    const auto& classes = conjugacy_classes(n);
    CharacterVector chi = CharacterVector::zero(n);
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        const auto sigma = permutation_of_type(n, classes.classes[c].cycle_type);
        Rational trace = 0;
        for (const auto& e : basis) {
            const Word lead = e.leading_word();
            Word content = lead, moved(lead.size());
            for (std::size_t i = 0; i < lead.size(); ++i) moved[i] = sigma[static_cast<std::size_t>(lead[i])];
            std::sort(content.begin(), content.end());
            std::sort(moved.begin(), moved.end());
            if (content != moved) continue;  // sigma moves e to a different letter content
            trace += algebra->coefficient(relabel(algebra->polynomial(e), sigma), lead);
        }
        chi.values[c] = trace;
    }
    return chi;
}

GradedPieceRep lie_character(const GeneratorSet& gens, int weight) {
    return {gens, weight, gens.internal_degree(weight), decompose_character(lie_character_vector(gens, weight))};
}

namespace {

// Lie weight sitting in the given internal degree, if any.
std::optional<int> weight_at_degree(const GeneratorSet& gens, int internal_degree) {
    const int step = gens.degree + gens.m - 1;
    const int shifted = internal_degree + gens.m - 1;
    if (shifted <= 0 || shifted % step != 0) return std::nullopt;
    return shifted / step;
}

}  // namespace

SymRep lie_degree_piece(const GeneratorSet& gens, int internal_degree) {
    gens.validate();
    auto w = weight_at_degree(gens, internal_degree);
    if (!w) return SymRep(gens.count);
    return lie_character(gens, *w).action;
}

SymRep gerstenhaber_character(const GeneratorSet& gens, int internal_degree) {
    gens.validate();
    const int n = gens.count;
    if (internal_degree < 0) return SymRep(n);
    const auto& classes = conjugacy_classes(n);
    const CharacterVector one{n, std::vector<Rational>(classes.classes.size(), Rational(1))};
    // by_degree[t] = character of the degree-t part of the algebra on Lie weights seen so far
    std::vector<CharacterVector> by_degree(static_cast<std::size_t>(internal_degree) + 1, CharacterVector::zero(n));
    by_degree[0] = one;
    for (int w = 1; gens.internal_degree(w) <= internal_degree; ++w) {
        const int delta = gens.internal_degree(w);
        const CharacterVector lie = lie_character_vector(gens, w);
        const Parity parity = parity_of(delta);
        std::vector<CharacterVector> powers;
        for (int j = 0; j * delta <= internal_degree; ++j) powers.push_back(graded_power_character(lie, j, parity));
        std::vector<CharacterVector> next(by_degree.size(), CharacterVector::zero(n));
        for (int t = 0; t <= internal_degree; ++t) {
            for (int j = 0; j * delta <= t; ++j) {
                const auto& lower = by_degree[static_cast<std::size_t>(t - j * delta)];
                next[static_cast<std::size_t>(t)] = next[static_cast<std::size_t>(t)] + lower * powers[static_cast<std::size_t>(j)];
            }
        }
        by_degree = std::move(next);
    }
    return decompose_character(by_degree.back());
}

AlgebraWeightReport verify_algebra_weight_bound(int d, int m, int l, int n_max) {
    if (l < 0 || n_max < 0) throw Error(ErrorCode::InvalidArgument, "l and n_max must be non-negative");
    AlgebraWeightReport report;
    report.d = d;
    report.m = m;
    report.l = l;
    report.n_max = n_max;
    Rational rate(m + 2, m + d);
    rate.canonicalize();
    report.bound = rate * l;
    std::vector<SymRep> lie_levels, gerst_levels;
    for (int n = 0; n <= n_max; ++n) {
        const GeneratorSet gens{n, d, m};
        lie_levels.push_back(lie_degree_piece(gens, l));
        gerst_levels.push_back(gerstenhaber_character(gens, l));
    }
    const std::string suffix = "^{" + std::to_string(d) + "," + std::to_string(m) + "," + std::to_string(l) + "}";
    report.lie_table = FIModuleTable("L" + suffix, true, std::move(lie_levels));
    report.gerstenhaber_table = FIModuleTable("G" + suffix, true, std::move(gerst_levels));
    report.lie_weight = weight_of(report.lie_table).weight;
    report.gerstenhaber_weight = weight_of(report.gerstenhaber_table).weight;
    report.lie_ok = Rational(report.lie_weight) <= report.bound;
    report.gerstenhaber_ok = Rational(report.gerstenhaber_weight) <= report.bound;
    return report;
}

}  // namespace repstab
