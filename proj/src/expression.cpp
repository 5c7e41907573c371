#include "ogring/expression.hpp"

#include <algorithm>

namespace ogring {

namespace {

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr symbol(Expr::Kind kind, int index) {
    if (index <= 0) throw invalid_input("generator index must be positive");
    Expr e;
    e.kind = kind;
    e.index = index;
    return make(std::move(e));
}

}  // namespace

ExprPtr F(int i) { return symbol(Expr::Kind::sym_f, i); }
ExprPtr G(int i) { return symbol(Expr::Kind::sym_g, i); }
ExprPtr T() {
    Expr e;
    e.kind = Expr::Kind::sym_t;
    return make(std::move(e));
}
ExprPtr E1() {
    Expr e;
    e.kind = Expr::Kind::sym_e1;
    return make(std::move(e));
}
ExprPtr Ei(int i) { return symbol(Expr::Kind::sym_ei, i); }
ExprPtr Ci(int i) { return symbol(Expr::Kind::sym_ci, i); }

ExprPtr lit(Int v) {
    Expr e;
    e.kind = Expr::Kind::literal;
    e.value = std::move(v);
    return make(std::move(e));
}

ExprPtr sum(std::vector<ExprPtr> kids) {
    Expr e;
    e.kind = Expr::Kind::sum;
    e.kids = std::move(kids);
    return make(std::move(e));
}

ExprPtr prod(std::vector<ExprPtr> kids) {
    Expr e;
    e.kind = Expr::Kind::product;
    e.kids = std::move(kids);
    return make(std::move(e));
}

ExprPtr pw(ExprPtr base, long exponent) {
    if (exponent < 0) throw invalid_input("negative exponent");
    Expr e;
    e.kind = Expr::Kind::power;
    e.kids.push_back(std::move(base));
    e.exponent = exponent;
    return make(std::move(e));
}

namespace {

template <typename Pred>
bool all_symbols(const ExprPtr& e, Pred pred) {
    switch (e->kind) {
        case Expr::Kind::literal: return true;
        case Expr::Kind::sum:
        case Expr::Kind::product:
            return std::all_of(e->kids.begin(), e->kids.end(),
                               [&](const ExprPtr& k) { return all_symbols(k, pred); });
        case Expr::Kind::power: return all_symbols(e->kids[0], pred);
        default: return pred(e->kind);
    }
}

}  // namespace

bool k_side(const ExprPtr& e) {
    return all_symbols(e, [](Expr::Kind k) {
        return k == Expr::Kind::sym_f || k == Expr::Kind::sym_g || k == Expr::Kind::sym_t;
    });
}

bool chow_side(const ExprPtr& e) {
    return all_symbols(e, [](Expr::Kind k) {
        return k == Expr::Kind::sym_e1 || k == Expr::Kind::sym_ei || k == Expr::Kind::sym_ci;
    });
}

bool expr_grade(const ExprPtr& e, long* grade) {
    switch (e->kind) {
        case Expr::Kind::sym_f:
        case Expr::Kind::sym_g: *grade = e->index; return true;
        case Expr::Kind::sym_t: *grade = -1; return true;
        case Expr::Kind::literal: *grade = 0; return true;
        case Expr::Kind::sum: {
            bool first = true;
            long g = 0;
            for (const auto& k : e->kids) {
                long kg = 0;
                if (!expr_grade(k, &kg)) return false;
                if (first) {
                    g = kg;
                    first = false;
                } else if (kg != g) {
                    return false;
                }
            }
            *grade = g;
            return true;
        }
        case Expr::Kind::product: {
            long g = 0;
            for (const auto& k : e->kids) {
                long kg = 0;
                if (!expr_grade(k, &kg)) return false;
                g += kg;
            }
            *grade = g;
            return true;
        }
        case Expr::Kind::power: {
            long kg = 0;
            if (!expr_grade(e->kids[0], &kg)) return false;
            *grade = kg * e->exponent;
            return true;
        }
        default: return false;  // Chow symbols carry no Rees grade
    }
}

namespace {

// A generator word: scalar * prod f(i) * prod g(i) * t^p applied to the unit.
struct Word {
    Int scalar = 1;
    std::vector<int> f_list;
    std::vector<int> g_list;
    int t_pow = 0;
};

constexpr size_t kMaxWords = 200000;

std::vector<Word> expand(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::sym_f: {
            Word w;
            w.f_list.push_back(e->index);
            return {w};
        }
        case Expr::Kind::sym_g: {
            Word w;
            w.g_list.push_back(e->index);
            return {w};
        }
        case Expr::Kind::sym_t: {
            Word w;
            w.t_pow = 1;
            return {w};
        }
        case Expr::Kind::literal: {
            if (e->value == 0) return {};
            Word w;
            w.scalar = e->value;
            return {w};
        }
        case Expr::Kind::sum: {
            std::vector<Word> out;
            for (const auto& k : e->kids) {
                auto part = expand(k);
                out.insert(out.end(), part.begin(), part.end());
                if (out.size() > kMaxWords) throw invalid_input("expression expansion too large");
            }
            return out;
        }
        case Expr::Kind::product: {
            std::vector<Word> out{Word{}};
            for (const auto& k : e->kids) {
                auto part = expand(k);
                std::vector<Word> next;
                next.reserve(out.size() * part.size());
                for (const auto& a : out)
                    for (const auto& b : part) {
                        Word w = a;
                        w.scalar *= b.scalar;
                        w.f_list.insert(w.f_list.end(), b.f_list.begin(), b.f_list.end());
                        w.g_list.insert(w.g_list.end(), b.g_list.begin(), b.g_list.end());
                        w.t_pow += b.t_pow;
                        next.push_back(std::move(w));
                    }
                out = std::move(next);
                if (out.size() > kMaxWords) throw invalid_input("expression expansion too large");
            }
            return out;
        }
        case Expr::Kind::power: {
            auto base = expand(e->kids[0]);
            if (e->exponent == 0) return {Word{}};
            if (base.size() == 1) {
                Word w;
                for (long s = 0; s < e->exponent; ++s) {
                    w.scalar *= base[0].scalar;
                    w.f_list.insert(w.f_list.end(), base[0].f_list.begin(), base[0].f_list.end());
                    w.g_list.insert(w.g_list.end(), base[0].g_list.begin(), base[0].g_list.end());
                    w.t_pow += base[0].t_pow;
                }
                return {w};
            }
            std::vector<Word> out{Word{}};
            for (long s = 0; s < e->exponent; ++s) {
                std::vector<Word> next;
                for (const auto& a : out)
                    for (const auto& b : base) {
                        Word w = a;
                        w.scalar *= b.scalar;
                        w.f_list.insert(w.f_list.end(), b.f_list.begin(), b.f_list.end());
                        w.g_list.insert(w.g_list.end(), b.g_list.begin(), b.g_list.end());
                        w.t_pow += b.t_pow;
                        next.push_back(std::move(w));
                    }
                out = std::move(next);
                if (out.size() > kMaxWords) throw invalid_input("expression expansion too large");
            }
            return out;
        }
        default: throw invalid_input("Chow-side symbol in a K-side expression");
    }
}

}  // namespace

ReesElem eval_expression(const ExprPtr& e, const ReesRing& ring) {
    if (!k_side(e)) throw invalid_input("Chow-side symbol in a K-side expression");
    ReesElem total = ring.zero();
    for (const auto& w : expand(e)) {
        ReesElem x = ring.unit();
        for (int i : w.f_list) x = ring.pieri_mul(i, x);
        for (int i : w.g_list) x = ring.mul_g(i, x);
        x = ring.mul_t_pow(x, w.t_pow);
        total = ring.add(total, ring.scale(x, w.scalar));
    }
    return total;
}

ChowElem res(const ExprPtr& e, const ChowRing& ring) {
    switch (e->kind) {
        case Expr::Kind::sym_e1: return ring.gen(1);
        case Expr::Kind::sym_ei: return ring.gen(e->index);
        case Expr::Kind::sym_ci: return ring.scale(ring.gen(e->index), Int(2));
        case Expr::Kind::literal: return ring.scale(ring.unit(), e->value);
        case Expr::Kind::sum: {
            ChowElem r = ring.zero();
            for (const auto& k : e->kids) r = ring.add(r, res(k, ring));
            return r;
        }
        case Expr::Kind::product: {
            ChowElem r = ring.unit();
            for (const auto& k : e->kids) r = ring.mul(r, res(k, ring));
            return r;
        }
        case Expr::Kind::power: return ring.pow(res(e->kids[0], ring), e->exponent);
        default: throw invalid_input("K-side symbol in a Chow-side expression");
    }
}

ExprPtr psi_substitute(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::sym_f: return Ei(e->index);
        case Expr::Kind::sym_g: return prod({lit(2), Ei(e->index)});
        case Expr::Kind::sym_t: return lit(0);
        case Expr::Kind::literal: return e;
        case Expr::Kind::sum: {
            std::vector<ExprPtr> kids;
            for (const auto& k : e->kids) kids.push_back(psi_substitute(k));
            return sum(std::move(kids));
        }
        case Expr::Kind::product: {
            std::vector<ExprPtr> kids;
            for (const auto& k : e->kids) kids.push_back(psi_substitute(k));
            return prod(std::move(kids));
        }
        case Expr::Kind::power: return pw(psi_substitute(e->kids[0]), e->exponent);
        default: throw invalid_input("Chow-side symbol under psi substitution");
    }
}

std::string expr_text(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::sym_f: return "f(" + std::to_string(e->index) + ")";
        case Expr::Kind::sym_g: return "g(" + std::to_string(e->index) + ")";
        case Expr::Kind::sym_t: return "t";
        case Expr::Kind::sym_e1: return "e";
        case Expr::Kind::sym_ei: return "e(" + std::to_string(e->index) + ")";
        case Expr::Kind::sym_ci: return "c(" + std::to_string(e->index) + ")";
        case Expr::Kind::literal: return e->value.str();
        case Expr::Kind::sum: {
            std::string out = "(";
            for (size_t k = 0; k < e->kids.size(); ++k) {
                if (k) out += " + ";
                out += expr_text(e->kids[k]);
            }
            return out + ")";
        }
        case Expr::Kind::product: {
            std::string out;
            for (size_t k = 0; k < e->kids.size(); ++k) {
                if (k) out += "*";
                out += expr_text(e->kids[k]);
            }
            return out;
        }
        case Expr::Kind::power: return expr_text(e->kids[0]) + "^" + std::to_string(e->exponent);
        default: return "?";
    }
}

}  // namespace ogring
