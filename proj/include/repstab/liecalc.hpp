#ifndef REPSTAB_LIECALC_HPP
#define REPSTAB_LIECALC_HPP

#include "repstab/fimod.hpp"
#include "repstab/linalg.hpp"
#include "repstab/reps.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace repstab {

/// n generators of degree d with a bracket of degree m-1.
struct GeneratorSet {
    int count = 0;
    int degree = 2;
    int m = 1;

    /// Parity that governs bracket symmetry: (d + m - 1) mod 2.
    Parity effective_parity() const { return parity_of(degree + m - 1); }
    /// Internal degree of a Lie word of the given weight: wd + (w-1)(m-1).
    int internal_degree(int weight) const { return weight * degree + (weight - 1) * (m - 1); }
    void validate() const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// Words over the alphabet {0, ..., alphabet-1}.
using Word = std::vector<int>;
/// Element of the tensor algebra: word -> coefficient, no zero entries.
using TensorPoly = std::map<Word, Rational>;

bool is_lyndon(const Word& w);
/// All Lyndon words of the given length, in lexicographic order.
std::vector<Word> lyndon_words(int alphabet, int length);
/// w = uv with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

/// A Lyndon word, or the square [w,w] of an odd Lyndon word.
struct LieBasisElement {
    Word word;
    bool square = false;

    /// Least word in the tensor image: w itself, or ww for a square.
    Word leading_word() const;
    int weight() const { return static_cast<int>(word.size()) * (square ? 2 : 1); }
    friend bool operator==(const LieBasisElement&, const LieBasisElement&) = default;
};

struct LieBasis {
    GeneratorSet gens;
    int weight = 0;
    std::vector<LieBasisElement> elements;  // sorted by leading word

    std::size_t size() const { return elements.size(); }
};

/// Binary bracket tree with generator leaves.
class BracketTree {
public:
    static BracketTree letter(int index);
    static BracketTree bracket(BracketTree left, BracketTree right);

    bool is_letter() const noexcept { return node_->left == nullptr; }
    int letter_index() const noexcept { return node_->letter; }
    BracketTree left() const { return BracketTree(node_->left); }
    BracketTree right() const { return BracketTree(node_->right); }
    int weight() const noexcept { return node_->weight; }
    /// "x1", "[x1,[x1,x2]]" with 1-based generator names.
    std::string to_string() const;

private:
    struct Node {
        int letter = -1;
        int weight = 1;
        std::shared_ptr<const Node> left, right;
    };
    explicit BracketTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Formal rational combination of bracket trees.
struct LieExpression {
    std::vector<std::pair<Rational, BracketTree>> terms;

    /// Parses e.g. "[x1,[x1,x2]] + 1/2*[x2,[x1,x1]] - [x2,x1]".
    static LieExpression parse(const std::string& text);
};

/// Free parity-graded Lie algebra inside the tensor algebra, where every generator has
/// the same parity p and [a,b] = ab - (-1)^{p^2 |a||b|} ba. Basis polynomials are
/// triangular: the basis element with leading word u has coefficient 1 on u (2 for a
/// square) and only larger words otherwise. Thread-safe.
class FreeLieAlgebra {
public:
    FreeLieAlgebra(int alphabet, Parity parity);

    int alphabet() const noexcept { return alphabet_; }
    Parity parity() const noexcept { return parity_; }

    std::vector<LieBasisElement> basis(int weight) const;
    /// Recognizes leading words of basis elements.
    bool is_leading_word(const Word& w) const;
    LieBasisElement element_for(const Word& leading) const;

    BracketTree tree(const LieBasisElement& e) const;
    TensorPoly polynomial(const BracketTree& t) const;
    TensorPoly polynomial(const LieBasisElement& e) const;
    TensorPoly bracket(const TensorPoly& a, int weight_a, const TensorPoly& b, int weight_b) const;

    /// Basis coordinates (keyed by leading word) of a Lie polynomial. Throws
    /// InvariantViolation when the polynomial is not in the image of the Lie algebra.
    std::map<Word, Rational> coordinates(TensorPoly p) const;
    /// Coefficient of a single basis element; stops as soon as the target is passed.
    Rational coefficient(TensorPoly p, const Word& leading) const;

private:
    const TensorPoly& cached_polynomial(const Word& leading) const;

    int alphabet_;
    Parity parity_;
    mutable std::mutex mutex_;
    mutable std::map<Word, std::shared_ptr<const TensorPoly>> cache_;
};

/// Word in letters with letter i sent to map[i] and multiplied by sign[i].
TensorPoly relabel(const TensorPoly& p, const std::vector<int>& letter_map, const std::vector<int>& letter_sign = {});

LieBasis lie_basis(const GeneratorSet& gens, int weight);

/// Normal form of a weight-homogeneous expression in the basis of its weight piece.
/// NonHomogeneous when the terms have different weights.
std::map<Word, Rational> bracket_expand(const GeneratorSet& gens, const LieExpression& expr);

struct GradedPieceRep {
    GeneratorSet gens;
    int weight = 0;           // Lie weight (number of generators in each word)
    int internal_degree = 0;  // wd + (w-1)(m-1)
    SymRep action;

    friend bool operator==(const GradedPieceRep&, const GradedPieceRep&) = default;
};

/// Desk-scale limits for Lie and Gerstenhaber characters.
inline constexpr int max_lie_generators = 8;
inline constexpr int max_lie_weight = 6;

/// S_n permuting the generators of the weight-w piece, by exact traces.
GradedPieceRep lie_character(const GeneratorSet& gens, int weight);
CharacterVector lie_character_vector(const GeneratorSet& gens, int weight);

/// L^{d,m,l}_n: the Lie piece of internal degree l (zero when no weight lands there).
SymRep lie_degree_piece(const GeneratorSet& gens, int internal_degree);

/// G^{d,m,l}_n: the internal-degree-l piece of the free graded-commutative algebra on
/// the free Lie algebra, each Lie weight placed at its internal degree.
SymRep gerstenhaber_character(const GeneratorSet& gens, int internal_degree);

struct AlgebraWeightReport {
    int d = 0, m = 0, l = 0, n_max = 0;
    Rational bound;  // (m+2)/(m+d) * l
    int lie_weight = 0;
    int gerstenhaber_weight = 0;
    bool lie_ok = false;
    bool gerstenhaber_ok = false;
    FIModuleTable lie_table{"", true, {}};
    FIModuleTable gerstenhaber_table{"", true, {}};

    bool passed() const { return lie_ok && gerstenhaber_ok; }
};

AlgebraWeightReport verify_algebra_weight_bound(int d, int m, int l, int n_max);

}  // namespace repstab

#endif
