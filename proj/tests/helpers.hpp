#pragma once

#include "wgeom/branch.hpp"
#include "wgeom/types.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testutil {

/// State whose largest coefficient equals its own critical value r1, built by
/// iterating t <- r1(normalize(base, t)) * |(base, t)| to its fixed point.
inline wgeom::WState boundary_state(const wgeom::Vector& base) {
  const Eigen::Index m = base.size();
  wgeom::Vector v(m + 1);
  v.head(m) = base;
  double t = base.maxCoeff();
  for (int i = 0; i < 500; ++i) {
    v[m] = t;
    const wgeom::WState w = wgeom::make_wstate(v, true);
    const double next = wgeom::r_crit(w).r1 * v.norm();
    const bool settled = std::abs(next - t) <= 1e-15 * std::max(1.0, t);
    t = next;
    if (settled) break;
  }
  v[m] = t;
  return wgeom::make_wstate(v, true);
}

struct CommandResult {
  int status = -1;
  std::string out;
};

/// Run a shell command, capturing stdout and the exit status.
inline CommandResult run_command(const std::string& cmd) {
  CommandResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

}  // namespace testutil
