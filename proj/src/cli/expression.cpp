#include "conductor/cli/expression.hpp"

#include <cctype>

#include "conductor/errors.hpp"

namespace conductor::cli {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const FiniteFlatAlgebra& algebra, const Bindings& bindings)
        : s_(text), a_(algebra), bindings_(bindings) {}

    AlgebraElement parse() {
        AlgebraElement v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ValidationError("", "in expression '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    AlgebraElement expr() {
        AlgebraElement v = term();
        while (true) {
            if (accept('+')) v = a_.add(v, term());
            else if (accept('-')) v = a_.sub(v, term());
            else return v;
        }
    }

    AlgebraElement term() {
        AlgebraElement v = unary();
        while (true) {
            if (accept('*')) {
                v = a_.mul(v, unary());
            } else if (accept('/')) {
                const std::size_t at = pos_;
                AlgebraElement d = unary();
                for (int k = 1; k < a_.rank(); ++k)
                    if (!d.coords[k].is_zero()) {
                        pos_ = at;
                        fail("division is only by units of O_K");
                    }
                if (!d.coords[0].is_unit()) {
                    pos_ = at;
                    fail("division is only by units of O_K");
                }
                v = a_.scale(d.coords[0].inverse(), v);
            } else {
                return v;
            }
        }
    }

    AlgebraElement unary() {
        if (accept('-')) return a_.neg(unary());
        return power();
    }

    AlgebraElement power() {
        AlgebraElement base = atom();
        if (!accept('^')) return base;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        if (pos_ - start > 4) fail("exponent too large");
        return a_.power(base, std::stoi(s_.substr(start, pos_ - start)));
    }

    AlgebraElement atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            AlgebraElement v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ - start > 18) fail("integer literal too large");
            return a_.scalar(a_.base().from_integer(std::stoll(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (auto it = bindings_.find(name); it != bindings_.end()) return it->second;
            const BaseDVR& base = a_.base();
            if (name == base.uniformizer_symbol()) return a_.scalar(base.uniformizer_power(1));
            const CoefficientField& field = base.field();
            if (field.kind() == CoefficientField::Kind::RationalFunctions && name == field.variable_name())
                return a_.scalar(base.constant(field.variable()));
            pos_ = start;
            fail("unknown name '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const FiniteFlatAlgebra& a_;
    const Bindings& bindings_;
    std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement evaluate(const std::string& text, const FiniteFlatAlgebra& algebra, const Bindings& bindings) {
    return Parser(text, algebra, bindings).parse();
}

Series evaluate_scalar(const std::string& text, const BaseDVR& base) {
    const FiniteFlatAlgebra line(base, {"1"}, {{{base.one()}}});
    return evaluate(text, line).coords[0];
}

}  // namespace conductor::cli
