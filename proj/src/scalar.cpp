#include "lattice_euclid/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace lattice_euclid {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int floor_of(const Rat& q) {
    Int result;
    mpz_fdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return result;
}

Rat frac(const Rat& q) { return q - Rat(floor_of(q)); }

bool parse_int(const std::string& text, Int& out) {
    std::size_t pos = 0;
    if (!text.empty() && text[0] == '-') pos = 1;
    if (pos == text.size()) return false;
    for (std::size_t k = pos; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
    }
    return out.set_str(text, 10) == 0;
}

}  // namespace lattice_euclid
