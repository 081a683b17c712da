// Copyright 2026 The planetrees Authors
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

#ifndef PLANETREES_RATIONAL_HPP_
#define PLANETREES_RATIONAL_HPP_

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace planetrees {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with a positive denominator. Every constructor and
// arithmetic result is normalized, so structural equality is value equality.
class ExactRational {
 public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(BigInt num) : num_(std::move(num)), den_(1) {}  // NOLINT
  ExactRational(long long num) : num_(num), den_(1) {}           // NOLINT
  ExactRational(BigInt num, BigInt den);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) {
    return lhs += rhs;
  }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) {
    return lhs *= rhs;
  }

  friend bool operator==(const ExactRational&, const ExactRational&) = default;
  friend std::strong_ordering operator<=>(const ExactRational& a,
                                          const ExactRational& b);

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

}  // namespace planetrees

#endif  // PLANETREES_RATIONAL_HPP_
