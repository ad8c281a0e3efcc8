#include "logcorners/chart.hpp"

#include <set>

#include "logcorners/error.hpp"

namespace logcorners {

Chart Chart::interval(const std::string& r, const MonoidElement& bound) {
  if (!bound.is_constant()) throw DomainError("interval bound must be a positive constant");
  Chart c = half_line(r);
  c.bounds.emplace(r, bound);
  return c;
}

Role Chart::role(const std::string& name) const {
  auto in = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), name) != v.end(); };
  if (in(free)) return Role::kFree;
  if (in(basic)) return Role::kBasic;
  if (in(phantom)) return Role::kPhantom;
  if (in(angular)) return Role::kAngular;
  return Role::kNone;
}

std::vector<std::string> Chart::coordinates() const {
  std::vector<std::string> out = free;
  out.insert(out.end(), basic.begin(), basic.end());
  out.insert(out.end(), phantom.begin(), phantom.end());
  out.insert(out.end(), angular.begin(), angular.end());
  return out;
}

void Chart::validate() const {
  std::set<std::string> seen;
  for (const auto& n : coordinates())
    if (!seen.insert(n).second) throw DomainError("coordinate '" + n + "' declared twice");
  for (const auto& [n, b] : bounds) {
    if (role(n) != Role::kBasic) throw DomainError("bound given for non-basic coordinate '" + n + "'");
    if (!b.is_constant()) throw DomainError("bound of '" + n + "' must be a positive constant");
  }
}

std::string Chart::to_string() const {
  std::vector<std::string> parts;
  for (const auto& n : free) parts.push_back(n + ":R");
  for (const auto& n : basic) {
    auto it = bounds.find(n);
    parts.push_back(it == bounds.end() ? n + ":H" : n + ":I(0," + it->second.to_string() + ")");
  }
  for (const auto& n : phantom) parts.push_back(n + ":E");
  for (const auto& n : angular) parts.push_back(n + ":S1");
  if (parts.empty()) return "pt";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " * ") + p;
  return out;
}

Chart product(const Chart& a, const Chart& b) {
  Chart c = a;
  c.free.insert(c.free.end(), b.free.begin(), b.free.end());
  c.basic.insert(c.basic.end(), b.basic.begin(), b.basic.end());
  c.phantom.insert(c.phantom.end(), b.phantom.begin(), b.phantom.end());
  c.angular.insert(c.angular.end(), b.angular.begin(), b.angular.end());
  c.bounds.insert(b.bounds.begin(), b.bounds.end());
  c.validate();
  return c;
}

}  // namespace logcorners
