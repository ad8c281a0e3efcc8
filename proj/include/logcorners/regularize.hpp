#pragma once

#include <string>
#include <vector>

#include "logcorners/logform.hpp"

namespace logcorners {

/// Regularized restriction to the face where the selected coordinates vanish:
/// coefficients at 0, log r -> log t_r, dlog r -> dlog t_r.
LogFunction reg_restrict(const LogFunction& f, const std::vector<std::string>& selected);
LogForm reg_restrict(const LogForm& w, const std::vector<std::string>& selected);

/// Replaces phantom logs by logs of the scale functions.
LogFunction apply_scale(const Scale& s, const LogFunction& f);
LogForm apply_scale(const Scale& s, const LogForm& w);

/// Regularized limit at a tangential basepoint; phantom logs must be scaled away first.
Scalar reglim(const LogFunction& f, const Basepoint& at);

/// Every coefficient carrying log(r)^k, k > 0, is divisible by r.
bool is_continuous(const LogFunction& f);

/// Contracting homotopy for a phantom factor t with unit scale.
LogForm homotopy_phantom(const LogForm& w, const std::string& t);
/// p^* s^* for the unit scale on t: drops every term involving log t or dlog t.
LogForm unit_projection(const LogForm& w, const std::string& t);

/// Antiderivative in the basic coordinate r of the dr-component; requires the
/// regularized restriction to r = 0 to vanish.
LogForm homotopy_interval(const LogForm& w, const std::string& r);

/// h'(id - q^* i^*) + q^* h i^* for the face r = 0, with q^*(t_r) = r.
LogForm homotopy_composite(const LogForm& w, const std::string& r);
/// q^* p^* s^* i^*, the complement of the composite homotopy's identity.
LogForm composite_projection(const LogForm& w, const std::string& r);

/// Closed form of the integral of s^n log^k s from 0 to r, as a function of r.
LogTerms power_log_antiderivative(const std::string& r, int n, int k);

}  // namespace logcorners
