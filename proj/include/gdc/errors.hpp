#pragma once

#include <stdexcept>
#include <string>

namespace gdc {

enum class errc {
    usage,                // bad flags / preconditions on user input
    io,                   // file missing, schema error
    pole,                 // evaluation at a pole
    non_convergence,      // quadrature or series failed to reach target
    precision_overflow,   // entry magnitude exceeded 2^(bits/2)
    not_hyperbolic,       // |trace| <= 2
    degenerate,           // degenerate geometry / duplicate inputs
    non_stabilized,       // ball enumeration completeness not certified
    budget_exceeded,      // resonance search too large
    exponent_excluded,    // weighted period sum at a = -1
    branch_gap,           // F_s expansion near s in {0, 1/2, 1}
    route_disagreement,   // independent evaluation routes disagree
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::usage: return "USAGE";
        case errc::io: return "IO";
        case errc::pole: return "POLE";
        case errc::non_convergence: return "NON_CONVERGENCE";
        case errc::precision_overflow: return "PRECISION_OVERFLOW";
        case errc::not_hyperbolic: return "NOT_HYPERBOLIC";
        case errc::degenerate: return "DEGENERATE";
        case errc::non_stabilized: return "NON_STABILIZED";
        case errc::budget_exceeded: return "BUDGET_EXCEEDED";
        case errc::exponent_excluded: return "EXPONENT_EXCLUDED";
        case errc::branch_gap: return "BRANCH_GAP";
        case errc::route_disagreement: return "ROUTE_DISAGREEMENT";
    }
    return "UNKNOWN";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

    /// CLI exit code convention: 1 usage, 2 I/O, 3 numerical, 4 non-stabilized.
    int exit_code() const {
        switch (code_) {
            case errc::usage: return 1;
            case errc::io: return 2;
            case errc::non_stabilized: return 4;
            default: return 3;
        }
    }

  private:
    errc code_;
};

}  // namespace gdc
