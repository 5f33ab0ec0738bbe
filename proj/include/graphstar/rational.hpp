// Copyright 2026 The Graphstar Authors
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

#ifndef GRAPHSTAR_RATIONAL_HPP_
#define GRAPHSTAR_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace graphstar {

// Exact rational scalar used for every coefficient in the library.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (whitespace allowed around the tokens).
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational ParseRational(std::string_view text);

// Formats as "p/q", or "p" when the denominator is 1.
std::string FormatRational(const Rational& value);

Rational Factorial(int n);

}  // namespace graphstar

#endif  // GRAPHSTAR_RATIONAL_HPP_
