#pragma once

// Symbolic evaluation of the operator products behind the branched-cover
// counts, by normal-ordering words of energy operators. A word is reduced by
// repeatedly moving the leftmost negative-energy operator to the left, either
// past its neighbor or by taking the commutator; every complete sequence of
// choices with a structurally nonzero value is a commutation pattern. Each
// pattern contributes a product of odd exponential factors, and the number of
// terminal zero-energy blocks (plus any scalar pairings) counts the connected
// components of the covers it enumerates.

#include <map>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

struct PatternSum {
    VarsPtr vars;                             // z_1..z_s, uniform cap
    std::map<int, Series<Rat>> by_components; // component count -> factor-product sum
    std::map<int, long> pattern_counts;       // component count -> #patterns

    Series<Rat> total() const;     // sum over all component counts
    Series<Rat> connected() const; // single-component part
    long count_total() const;
    long count_connected() const;
};

// The raw vacuum expectation of the standard word: raising operators for the
// parts of mu, s middle operators carrying z_1..z_s, lowering operators for
// the parts of nu. Each z-variable is truncated at cap_per_var.
PatternSum pattern_vev(const Partition& mu, const Partition& nu, long s, long cap_per_var);

// pattern_vev normalized by prod(mu) * prod(nu): the multivariate series whose
// coefficient of z_1^{a_1+1}...z_s^{a_s+1} counts covers with cycle levels
// a_1, ..., a_s at the s movable branch points.
Series<Rat> mixed_cycle_series(const Partition& mu, const Partition& nu, long s,
                               long cap_per_var);

// Coefficient extraction at uniform level r: all z-exponents equal to r + 1.
Rat hurwitz_patterns(const Partition& mu, const Partition& nu, long r, long s);
Rat connected_patterns(const Partition& mu, const Partition& nu, long r, long s);

} // namespace hurwitz
