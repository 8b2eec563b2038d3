#pragma once

#include <string>
#include <vector>

namespace reldiam {

/// Named reproduction experiments. Each writes <name>.json and <name>.md
/// into outdir and returns overall pass/fail. Experiments are
/// deterministic (embedded seeds) and embed their pass tolerances.
/// Names: lemma-dm, theorem-min, heptagon, circle8, optimal-table,
/// hex-asymptotics.
bool run_repro(const std::string& name, const std::string& outdir);

std::vector<std::string> repro_names();

}  // namespace reldiam
