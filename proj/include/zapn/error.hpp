/**************************************************************************
 * error.hpp
 *
 * Copyright 2026 The zapn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zapn {

enum class Errc {
    NonIrreducibleModulus,
    DegreeMismatch,
    UnsupportedDegree,
    DivisionByZero,
    BothZero,
    ConstantPolynomial,
    ZeroPolynomial,
    SyntaxError,
    UnknownVariable,
    MissingVariable,
    DegreeZeroInVariable,
    LeadingCoefficientVanished,
    InterpolationFailed,
    ZeroDirection,
    FieldTooLarge,
    DegenerateExponent,
    ExponentOutOfRange,
    ConstraintViolated,
    MTooSmall,
    NotApplicable,
    UnknownTheorem,
    TranscriptionMissing,
    Io,
};

constexpr std::string_view errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::NonIrreducibleModulus: return "NonIrreducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::UnsupportedDegree: return "UnsupportedDegree";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::BothZero: return "BothZero";
        case Errc::ConstantPolynomial: return "ConstantPolynomial";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::UnknownVariable: return "UnknownVariable";
        case Errc::MissingVariable: return "MissingVariable";
        case Errc::DegreeZeroInVariable: return "DegreeZeroInVariable";
        case Errc::LeadingCoefficientVanished: return "LeadingCoefficientVanished";
        case Errc::InterpolationFailed: return "InterpolationFailed";
        case Errc::ZeroDirection: return "ZeroDirection";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::DegenerateExponent: return "DegenerateExponent";
        case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
        case Errc::ConstraintViolated: return "ConstraintViolated";
        case Errc::MTooSmall: return "MTooSmall";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::UnknownTheorem: return "UnknownTheorem";
        case Errc::TranscriptionMissing: return "TranscriptionMissing";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace zapn
