#pragma once

#include <set>

#include "backorb/dynamics/map.hpp"

namespace backorb::integrality {

// A place of Q: the archimedean absolute value or a p-adic one normalized
// so |p|_p = 1/p.
struct Place {
    bool archimedean;
    Int p;  // prime when finite

    static Place infinite_place() { return {true, Int(0)}; }
    static Place finite(Int prime) { return {false, std::move(prime)}; }
};

// A finite set of places; the archimedean place is always a member.
class PlaceSet {
public:
    PlaceSet() = default;
    explicit PlaceSet(std::set<Int> finite_primes) : primes_(std::move(finite_primes)) {}
    static PlaceSet parse(const std::string& csv);

    const std::set<Int>& finite_primes() const { return primes_; }
    bool contains(const Int& p) const { return primes_.count(p) > 0; }
    void insert(const Int& p) { primes_.insert(p); }
    std::string to_string() const;

private:
    std::set<Int> primes_;
};

// v-adic chordal distance between rational points: exact p-power at finite
// places (carried as the valuation of the cross term), numeric at the
// archimedean place.  delta = 1 is maximal distance.
struct ChordalValue {
    Place place;
    long cross_valuation = 0;  // finite places: delta = p^(-cross_valuation)
    double numeric = 0.0;      // evaluated value at every place

    double value() const { return numeric; }
};

ChordalValue chordal(const dynamics::ProjPoint& P, const dynamics::ProjPoint& Q, const Place& v);

// lambda_{P,v}(Q) = -log delta_v(P, Q); exact valuation * log p at finite
// places.  Throws on P = Q (infinite local height).
struct LocalHeight {
    Place place;
    long valuation = 0;  // finite places: lambda = valuation * log p
    double numeric = 0.0;

    double value() const { return numeric; }
};

LocalHeight local_height(const dynamics::ProjPoint& P, const dynamics::ProjPoint& Q,
                         const Place& v);

}  // namespace backorb::integrality
