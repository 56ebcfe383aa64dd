#include "cauchy_jump/error.hpp"

namespace cauchy_jump {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::precision: return "precision";
    case ErrorKind::corner: return "corner";
    case ErrorKind::endpoint: return "endpoint";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::degenerate_map: return "degenerate_map";
    case ErrorKind::annulus: return "annulus";
    case ErrorKind::probe_region: return "probe_region";
    case ErrorKind::parse: return "parse";
    }
    return "unknown";
}

}  // namespace cauchy_jump
