// Copyright 2026 The cvdc Authors
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

#include <stdexcept>
#include <string>

namespace cvdc {

/// Dimension or index mismatch: the inputs do not describe a well-formed
/// object (wrong matrix size, mode out of range, repeated indices).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs are well-formed but outside the domain of the formula
/// (unphysical covariance, negative photon number, violated triangle).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The encoding budget is too small for two-quadrature encoding:
/// n_s <= boundary. Callers can raise the photon budget past `boundary()`.
class SingleQuadratureRegime : public DomainError {
 public:
  SingleQuadratureRegime(double n_s, double boundary)
      : DomainError("single-quadrature regime: n_s = " + std::to_string(n_s) +
                    " <= " + std::to_string(boundary) +
                    " (two-quadrature encoding needs n_s above this boundary)"),
        n_s_(n_s),
        boundary_(boundary) {}

  double n_s() const noexcept { return n_s_; }
  double boundary() const noexcept { return boundary_; }

 private:
  double n_s_;
  double boundary_;
};

/// A bracketed search ended on its bracket edge instead of an interior
/// minimum.
class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvdc
