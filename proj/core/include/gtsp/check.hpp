#pragma once

#include <string>

namespace gtsp {

// Outcome of re-checking a certificate: ok plus a human-readable reason.
struct CertificateCheck {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

}  // namespace gtsp
