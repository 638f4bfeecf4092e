#pragma once

#include "polyvor/problem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyvor {

/// Shared options of every command.
struct CommandOptions {
    std::optional<std::uint64_t> seed;
    std::vector<RationalVector> points;  // replaces the problem's points when nonempty
    bool want_svg = false;
};

struct CommandResult {
    Json json;
    std::string svg;  // empty unless requested and the instance is planar
};

CommandResult cmd_ball_info(const Problem& p, const CommandOptions& o = {});
CommandResult cmd_type(const Problem& p, const CommandOptions& o = {});
CommandResult cmd_voronoi_cone(const Problem& p, const CommandOptions& o = {});
CommandResult cmd_stratify(const Problem& p, const CommandOptions& o = {});
CommandResult cmd_medial(const Problem& p, const CommandOptions& o = {});
CommandResult cmd_distance(const Problem& p, const CommandOptions& o = {});
CommandResult cmd_render(const Problem& p, const CommandOptions& o = {});

/// Dispatch by command name; throws ProblemError for unknown names.
CommandResult run_command(const std::string& name, const Problem& p, const CommandOptions& o = {});

/// Exit status for an exception escaping a command: 2 ball error, 3 point
/// off the variety, 4 singular point, 5 oracle failure, 1 anything else.
int exit_code_for(const std::exception& e);

}  // namespace polyvor
