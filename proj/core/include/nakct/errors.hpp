#pragma once

#include <stdexcept>
#include <string>

namespace nakct {

// Precondition and validation failures. Mathematical "no" answers are
// returned as values (Verdict, SeriesShape, ...), never thrown.
class nakct_error : public std::runtime_error {
public:
    nakct_error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline nakct_error growth_violation(int i) {
    return nakct_error("GrowthViolation", "entry " + std::to_string(i) + " exceeds predecessor + 1");
}
inline nakct_error not_connected() { return nakct_error("NotConnected", "acyclic series must contain exactly one 1, in front"); }
inline nakct_error entry_too_small(int i) {
    return nakct_error("EntryTooSmall", "cyclic series entry " + std::to_string(i) + " is below 2");
}
inline nakct_error cyclic_input() { return nakct_error("CyclicInput", "operation requires acyclic series"); }
inline nakct_error no_self_deglue_point() { return nakct_error("NoSelfDegluePoint", "no rotation starts with (x, 2), x != 2"); }
inline nakct_error length_mismatch() { return nakct_error("LengthMismatch", "tuples of different length"); }
inline nakct_error acyclic_context() { return nakct_error("AcyclicContext", "shift classes exist only over cyclic series"); }
inline nakct_error is_projective_error() { return nakct_error("IsProjective", "module is projective"); }
inline nakct_error zero_module() { return nakct_error("ZeroModule", "zero module has no projective cover"); }
inline nakct_error cap_exceeded(const std::string& what) { return nakct_error("CapExceeded", what); }
inline nakct_error bridge_missing(const std::string& what) { return nakct_error("BridgeMissing", what); }

}  // namespace nakct
