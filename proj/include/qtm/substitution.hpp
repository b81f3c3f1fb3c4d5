// Copyright 2026 The qtm Authors
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

#include <cstddef>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtm {

/// Raised when a word or schedule would exceed its configured capacity.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Words over the two-letter alphabet {a, b}.
using Word = std::string;

inline constexpr std::size_t kDefaultMaxWordLength = std::size_t{1} << 20;

/// Letter-rewriting rule a -> image_of_a, b -> image_of_b.
struct SubstitutionRule {
  Word image_of_a;
  Word image_of_b;
  std::string name;

  /// a -> ab, b -> a
  static SubstitutionRule fibonacci();
  /// a -> ab, b -> ba
  static SubstitutionRule thue_morse();
  /// a -> ab, b -> aa
  static SubstitutionRule period_doubling();
  static SubstitutionRule custom(Word image_of_a, Word image_of_b);

  /// Looks up a built-in rule by its short name (qf, tm, pd).
  static SubstitutionRule by_name(std::string_view name);

  /// True when iterating from seed `a` yields nested prefixes.
  [[nodiscard]] bool prefix_stable() const noexcept;

  /// Throws std::invalid_argument on an empty image or a letter outside {a, b}.
  void validate() const;
};

/// Applies the rule `iterations` times to `seed`, letter by letter.
Word expand_rule(const SubstitutionRule& rule, std::string_view seed, std::size_t iterations,
                 std::size_t max_length = kDefaultMaxWordLength);

/// Finite prefix of the fixed point of a prefix-stable rule grown from `a`.
class LetterSequence {
 public:
  LetterSequence(Word letters, SubstitutionRule rule);

  [[nodiscard]] const Word& letters() const noexcept { return letters_; }
  [[nodiscard]] const SubstitutionRule& rule() const noexcept { return rule_; }
  [[nodiscard]] std::size_t length() const noexcept { return letters_.size(); }
  /// One-based access matching the schedule index m.
  [[nodiscard]] char letter(std::size_t m) const;
  /// Number of occurrences of `letter` among the first `prefix` letters.
  [[nodiscard]] std::size_t count(char letter, std::size_t prefix) const;

 private:
  Word letters_;
  SubstitutionRule rule_;
};

LetterSequence generate_letters(const SubstitutionRule& rule, std::size_t length,
                                std::size_t max_length = kDefaultMaxWordLength);

/// Fraction of positions carrying `letter` ('a' or 'b').
double letter_frequency(const LetterSequence& seq, char letter);

enum class ScheduleKind { regular, substitution, chaotic_fibonacci };
enum class Reduction { mod_2pi, none };

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// ln of the golden mean, quoted for the chaotic Fibonacci drive. Documentation only.
inline constexpr double kChaoticFibonacciLyapunov = 0.48121182505960344;

/// Rotation-angle schedule {alpha_m}, m = 1, 2, ...
///
/// Substitution schedules map letter `a` to alpha1 and `b` to alpha2. The
/// chaotic Fibonacci schedule obeys alpha_{m+1} = alpha_m + alpha_{m-1} with
/// seeds alpha1, alpha2; its table is materialized at construction so every
/// lookup is O(1). Regular schedules have unbounded capacity.
class AngleSchedule {
 public:
  static AngleSchedule regular(double alpha1);
  static AngleSchedule substitution(LetterSequence letters, double alpha1, double alpha2);
  static AngleSchedule chaotic_fibonacci(double alpha1, double alpha2, std::size_t length,
                                         Reduction reduction = Reduction::mod_2pi);

  /// Same law with alpha1 += d1 and alpha2 += d2. For the chaotic drive the
  /// offsets enter the seeds, so the deviation at index m follows the recursion.
  [[nodiscard]] AngleSchedule with_offsets(double d1, double d2) const;

  [[nodiscard]] ScheduleKind kind() const noexcept { return kind_; }
  [[nodiscard]] double alpha1() const noexcept { return alpha1_; }
  [[nodiscard]] double alpha2() const noexcept { return alpha2_; }
  [[nodiscard]] Reduction reduction() const noexcept { return reduction_; }
  /// Present for substitution schedules only.
  [[nodiscard]] const LetterSequence* letters() const noexcept { return letters_.get(); }
  /// Largest valid m.
  [[nodiscard]] std::size_t capacity() const noexcept;
  /// Short name: regular, qf, tm, pd, cf or the custom rule name.
  [[nodiscard]] std::string label() const;

  /// Angle alpha_m; throws CapacityError when m is out of range.
  [[nodiscard]] double angle(std::size_t m) const;

 private:
  AngleSchedule() = default;

  ScheduleKind kind_ = ScheduleKind::regular;
  double alpha1_ = 0.0;
  double alpha2_ = 0.0;
  Reduction reduction_ = Reduction::none;
  std::shared_ptr<const LetterSequence> letters_;
  std::shared_ptr<const std::vector<double>> table_;
};

double schedule_angle(const AngleSchedule& schedule, std::size_t m);

/// Reduces an angle into [0, 2pi).
double reduce_angle(double angle) noexcept;

}  // namespace qtm
