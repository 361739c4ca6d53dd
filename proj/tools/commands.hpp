#pragma once

#include "report.hpp"

namespace cli {

void cmd_check(Report& rep, const std::vector<std::string>& paths, const RunConfig& cfg);
void cmd_free(Report& rep, const Instance& I, const RunConfig& cfg);
void cmd_atiyah(Report& rep, const Instance& I, const RunConfig& cfg);
void cmd_curvature(Report& rep, const Instance& I, const RunConfig& cfg);
void cmd_mc(Report& rep, const Instance& I, const RunConfig& cfg);

}  // namespace cli
