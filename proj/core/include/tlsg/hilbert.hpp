// Copyright 2026 The tlsgates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "tlsg/errors.hpp"

namespace tlsg {

/// Composite Hilbert space of n two-level systems and one bosonic mode
/// truncated to fock_cutoff number states (levels 0 .. fock_cutoff-1).
///
/// Tensor ordering is fixed once and for all as
///   TLS_0 (x) TLS_1 (x) ... (x) TLS_{n-1} (x) Fock,
/// i.e. the Fock index is the fastest-running index of the composite basis.
/// Every embedding helper in operators.hpp assumes this ordering.
struct HilbertSpace {
  int n_tls = 1;
  int fock_cutoff = 2;

  HilbertSpace() = default;
  HilbertSpace(int n, int nf) : n_tls(n), fock_cutoff(nf) {
    // n_tls == 0 is allowed for bare-cavity test spaces.
    if (n_tls < 0) throw ConfigError("HilbertSpace: n_tls must be >= 0");
    if (fock_cutoff < 2) throw ConfigError("HilbertSpace: fock_cutoff must be >= 2");
  }

  int tls_dim() const { return 1 << n_tls; }
  int dim() const { return tls_dim() * fock_cutoff; }

  bool operator==(const HilbertSpace&) const = default;
};

}  // namespace tlsg
