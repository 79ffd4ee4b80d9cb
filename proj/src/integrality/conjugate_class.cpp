#include "backorb/integrality/conjugate_class.hpp"

#include <stdexcept>

#include "backorb/factor/factorize.hpp"

namespace backorb::integrality {

ConjugateClass ConjugateClass::from_minpoly(const IntPoly& p) {
    IntPoly q = exactnum::primitive_positive(p);
    if (q.degree() < 1) throw std::invalid_argument("class needs degree >= 1");
    if (!factor::is_irreducible(q)) throw std::invalid_argument("minimal polynomial reducible");
    return ConjugateClass(std::move(q));
}

ConjugateClass ConjugateClass::from_irreducible(IntPoly p) {
    IntPoly q = exactnum::primitive_positive(p);
    if (q.degree() < 1) throw std::invalid_argument("class needs degree >= 1");
    return ConjugateClass(std::move(q));
}

ConjugateClass ConjugateClass::from_rational(const Rat& r) {
    return ConjugateClass(IntPoly({Int(-r.get_num()), Int(r.get_den())}));
}

Rat ConjugateClass::rational_value() const {
    if (poly_.degree() != 1) throw std::logic_error("class is not rational");
    return exactnum::make_rat(-poly_[0], poly_[1]);
}

}  // namespace backorb::integrality
