#pragma once

#include "ogring/chow_ring.hpp"
#include "ogring/core.hpp"
#include "ogring/rees_ring.hpp"

#include <memory>
#include <vector>

namespace ogring {

// Evaluation tree over the generators of both rings.  K-side symbols are
// F(i), G(i) and T; Chow-side symbols are E1 (the degree-1 class e),
// Ei(i) = e(i) and Ci(i) = c(i).  Indices up to n+1 are legal; out-of-range
// generators evaluate to zero.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { sym_f, sym_g, sym_t, sym_e1, sym_ei, sym_ci, literal, sum, product, power };

    Kind kind;
    int index = 0;               // generator index for sym_* nodes
    Int value;                   // literal
    std::vector<ExprPtr> kids;   // sum / product
    long exponent = 0;           // power (kids[0] ^ exponent)
};

ExprPtr F(int i);
ExprPtr G(int i);
ExprPtr T();
ExprPtr E1();
ExprPtr Ei(int i);
ExprPtr Ci(int i);
ExprPtr lit(Int v);
ExprPtr sum(std::vector<ExprPtr> kids);
ExprPtr prod(std::vector<ExprPtr> kids);
ExprPtr pw(ExprPtr base, long exponent);

bool k_side(const ExprPtr& e);     // only F/G/T symbols
bool chow_side(const ExprPtr& e);  // only E1/Ei/Ci symbols

// Grade of a homogeneous K-side expression (F(i),G(i): i; T: -1); returns
// false when addends disagree.
bool expr_grade(const ExprPtr& e, long* grade);

// Evaluate a K-side expression in the Rees ring.  The element is built by
// expanding to a sum of generator words and driving each word through the
// Pieri/t operators; Chow-side symbols are a type error.
ReesElem eval_expression(const ExprPtr& e, const ReesRing& ring);

// Restriction to CH(X-bar): Ci(i) -> 2 e(i), E1 -> e(1), Ei(i) -> e(i),
// then evaluation.  K-side symbols are a type error.
ChowElem res(const ExprPtr& e, const ChowRing& ring);

// F(i) -> Ei(i), G(i) -> 2 Ei(i), T -> 0 on the tree.
ExprPtr psi_substitute(const ExprPtr& e);

std::string expr_text(const ExprPtr& e);

}  // namespace ogring
