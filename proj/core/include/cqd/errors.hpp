#pragma once

#include <stdexcept>
#include <string>

namespace cqd {

/// Error categories surfaced to callers. The CLI maps these onto exit codes
/// (validation -> 2, numeric/solver/io -> 3).
enum class errc {
  invalid_argument,
  invalid_circuit,
  config_error,
  numeric_domain,
  solver_failure,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::invalid_circuit: return "invalid-circuit";
    case errc::config_error: return "config-error";
    case errc::numeric_domain: return "numeric-domain";
    case errc::solver_failure: return "solver-failure";
    case errc::io_error: return "io-error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void throw_error(errc code, const std::string& msg) {
  throw error(code, msg);
}

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) throw_error(code, msg);
}

}  // namespace cqd
