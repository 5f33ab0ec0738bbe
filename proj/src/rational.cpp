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

#include "graphstar/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace graphstar {
namespace {

std::string Trim(std::string_view text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  return std::string(text.substr(begin, end - begin));
}

bool IsInteger(const std::string& s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string trimmed = Trim(text);
  const size_t slash = trimmed.find('/');
  std::string num = Trim(trimmed.substr(0, slash));
  std::string den = slash == std::string::npos ? "1" : Trim(trimmed.substr(slash + 1));
  if (!IsInteger(num) || !IsInteger(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string FormatRational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational Factorial(int n) {
  mpz_class result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return Rational(result);
}

}  // namespace graphstar
