// Copyright 2026 The Hueckel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hueckel/error.hpp"

namespace hueckel {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::AlternatingOddN: return "AlternatingOddN";
    case ErrorCode::CycleTooSmall: return "CycleTooSmall";
    case ErrorCode::UnsupportedCouplings: return "UnsupportedCouplings";
    case ErrorCode::ZeroCoupling: return "ZeroCoupling";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SingularLattice: return "SingularLattice";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::EnergyAtPole: return "EnergyAtPole";
    case ErrorCode::NumericallySingular: return "NumericallySingular";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NearSingularAngle: return "NearSingularAngle";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::MethodNotApplicable: return "MethodNotApplicable";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
  }
  return "Unknown";
}

}  // namespace hueckel
