#ifndef HIGGSMOT_RESIDUES_HPP
#define HIGGSMOT_RESIDUES_HPP

#include <optional>

#include "higgsmot/curve.hpp"
#include "higgsmot/partition.hpp"
#include "higgsmot/series_z.hpp"

namespace higgsmot {

// Rational functions in u, v, z_1, ..., z_n; z_i sits at z_index(i).
using MultiRational = RationalFunction;

// J_lambda(z) = prod over boxes of zeta*(L^{-1-l(s)} z^{a(s)}), in (u, v, z).
RationalFunction j_mot_function(const CurveModel& c, const Partition& lambda);
SeriesZ j_mot(const CurveModel& c, const Partition& lambda, int truncation);

// L^mot(z_n, ..., z_1) reduced, in 2 + n variables. Cached per (g, n).
MultiRational l_mot(const CurveModel& c, int n);

// P_lambda / Q_lambda in (u, v, z): clear the pole factors 1 - L z_{j+1}/z_j
// inside each block of L^mot, then substitute z_i -> L^{1-i} z^{b(i)}.
// Cached per (g, lambda). Throws NonInvertibleQAtZero.
RationalFunction res_lambda(const CurveModel& c, const Partition& lambda);
SeriesZ h_mot(const CurveModel& c, const Partition& lambda, int truncation);

// The same residue taken one ratio at a time, z_2/z_1 first, each step a
// one-variable simple-pole residue. Throws HigherOrderPole when a step
// meets a pole of order two or more.
RationalFunction sequential_res_lambda(const CurveModel& c, const Partition& lambda);

// res_{z=x} f dz = ((x - z) f)|_{z=x} for f in (u, v, z); zero when f is
// regular at x. Throws HigherOrderPole.
MotClass simple_pole_residue(const RationalFunction& f, const MotClass& x);

// The common value of A_d x^{d+1} over the last `window` coefficients of the
// z-expansion of f up to z^D, or nullopt when those values differ.
std::optional<MotClass> stabilized_limit(const RationalFunction& f, const MotClass& x, int truncation, int window);

}  // namespace higgsmot

#endif  // HIGGSMOT_RESIDUES_HPP
