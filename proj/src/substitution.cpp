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

#include "qtm/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace qtm {

namespace {

bool is_letter(char c) { return c == 'a' || c == 'b'; }

void check_word(std::string_view word, std::string_view what) {
  if (word.empty()) {
    throw std::invalid_argument(fmt::format("{} must be non-empty", what));
  }
  auto bad = std::find_if_not(word.begin(), word.end(), is_letter);
  if (bad != word.end()) {
    throw std::invalid_argument(
        fmt::format("{} contains letter '{}' outside {{a, b}}", what, *bad));
  }
}

}  // namespace

SubstitutionRule SubstitutionRule::fibonacci() { return {"ab", "a", "qf"}; }
SubstitutionRule SubstitutionRule::thue_morse() { return {"ab", "ba", "tm"}; }
SubstitutionRule SubstitutionRule::period_doubling() { return {"ab", "aa", "pd"}; }

SubstitutionRule SubstitutionRule::custom(Word image_of_a, Word image_of_b) {
  SubstitutionRule rule{std::move(image_of_a), std::move(image_of_b), "custom"};
  rule.validate();
  return rule;
}

SubstitutionRule SubstitutionRule::by_name(std::string_view name) {
  if (name == "qf") return fibonacci();
  if (name == "tm") return thue_morse();
  if (name == "pd") return period_doubling();
  throw std::invalid_argument(fmt::format("unknown substitution rule '{}'", name));
}

bool SubstitutionRule::prefix_stable() const noexcept {
  // xi(a) = a... makes xi^k(a) a prefix of xi^{k+1}(a); a longer image is
  // needed for the sequence to grow.
  return image_of_a.size() >= 2 && image_of_a.front() == 'a';
}

void SubstitutionRule::validate() const {
  check_word(image_of_a, "image of a");
  check_word(image_of_b, "image of b");
}

Word expand_rule(const SubstitutionRule& rule, std::string_view seed, std::size_t iterations,
                 std::size_t max_length) {
  rule.validate();
  check_word(seed, "seed");
  if (seed.size() > max_length) {
    throw CapacityError(fmt::format("seed length {} exceeds maximum {}", seed.size(), max_length));
  }
  Word current(seed);
  Word next;
  for (std::size_t it = 0; it < iterations; ++it) {
    std::size_t grown = 0;
    for (char c : current) {
      grown += (c == 'a' ? rule.image_of_a : rule.image_of_b).size();
    }
    if (grown > max_length) {
      throw CapacityError(fmt::format("iteration {} would produce {} letters, maximum is {}",
                                      it + 1, grown, max_length));
    }
    next.clear();
    next.reserve(grown);
    for (char c : current) {
      next += (c == 'a' ? rule.image_of_a : rule.image_of_b);
    }
    current.swap(next);
  }
  return current;
}

LetterSequence::LetterSequence(Word letters, SubstitutionRule rule)
    : letters_(std::move(letters)), rule_(std::move(rule)) {
  check_word(letters_, "letter sequence");
}

char LetterSequence::letter(std::size_t m) const {
  if (m == 0 || m > letters_.size()) {
    throw CapacityError(
        fmt::format("letter index {} outside 1..{}", m, letters_.size()));
  }
  return letters_[m - 1];
}

std::size_t LetterSequence::count(char letter, std::size_t prefix) const {
  prefix = std::min(prefix, letters_.size());
  return static_cast<std::size_t>(
      std::count(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(prefix), letter));
}

LetterSequence generate_letters(const SubstitutionRule& rule, std::size_t length,
                                std::size_t max_length) {
  rule.validate();
  if (length == 0) {
    throw std::invalid_argument("letter sequence length must be at least 1");
  }
  if (!rule.prefix_stable()) {
    throw std::invalid_argument(fmt::format(
        "rule '{}' is not prefix-stable from seed a (image of a is '{}')", rule.name,
        rule.image_of_a));
  }
  if (length > max_length) {
    throw CapacityError(fmt::format("requested {} letters, maximum is {}", length, max_length));
  }
  Word word = "a";
  while (word.size() < length) {
    // The next iterate may overshoot the requested length; allow that as long
    // as the overshoot itself fits.
    Word grown;
    for (char c : word) {
      grown += (c == 'a' ? rule.image_of_a : rule.image_of_b);
      if (grown.size() >= length) break;
    }
    word.swap(grown);
  }
  word.resize(length);
  return LetterSequence(std::move(word), rule);
}

double letter_frequency(const LetterSequence& seq, char letter) {
  if (!is_letter(letter)) {
    throw std::invalid_argument(fmt::format("letter '{}' outside {{a, b}}", letter));
  }
  return static_cast<double>(seq.count(letter, seq.length())) /
         static_cast<double>(seq.length());
}

double reduce_angle(double angle) noexcept {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value plus 2pi can round up to 2pi itself.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

AngleSchedule AngleSchedule::regular(double alpha1) {
  if (!std::isfinite(alpha1)) throw std::invalid_argument("alpha1 must be finite");
  AngleSchedule s;
  s.kind_ = ScheduleKind::regular;
  s.alpha1_ = alpha1;
  s.alpha2_ = alpha1;
  return s;
}

AngleSchedule AngleSchedule::substitution(LetterSequence letters, double alpha1, double alpha2) {
  if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) {
    throw std::invalid_argument("alpha1 and alpha2 must be finite");
  }
  AngleSchedule s;
  s.kind_ = ScheduleKind::substitution;
  s.alpha1_ = alpha1;
  s.alpha2_ = alpha2;
  s.letters_ = std::make_shared<const LetterSequence>(std::move(letters));
  return s;
}

AngleSchedule AngleSchedule::chaotic_fibonacci(double alpha1, double alpha2, std::size_t length,
                                               Reduction reduction) {
  if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) {
    throw std::invalid_argument("alpha1 and alpha2 must be finite");
  }
  if (length == 0) throw std::invalid_argument("chaotic schedule length must be at least 1");
  const bool reduce = reduction == Reduction::mod_2pi;
  std::vector<double> table;
  table.reserve(length);
  table.push_back(reduce ? reduce_angle(alpha1) : alpha1);
  if (length > 1) table.push_back(reduce ? reduce_angle(alpha2) : alpha2);
  for (std::size_t i = 2; i < length; ++i) {
    double next = table[i - 1] + table[i - 2];
    table.push_back(reduce ? reduce_angle(next) : next);
  }
  AngleSchedule s;
  s.kind_ = ScheduleKind::chaotic_fibonacci;
  s.alpha1_ = alpha1;
  s.alpha2_ = alpha2;
  s.reduction_ = reduction;
  s.table_ = std::make_shared<const std::vector<double>>(std::move(table));
  return s;
}

AngleSchedule AngleSchedule::with_offsets(double d1, double d2) const {
  switch (kind_) {
    case ScheduleKind::regular:
      return regular(alpha1_ + d1);
    case ScheduleKind::substitution:
      return substitution(*letters_, alpha1_ + d1, alpha2_ + d2);
    case ScheduleKind::chaotic_fibonacci:
      return chaotic_fibonacci(alpha1_ + d1, alpha2_ + d2, table_->size(), reduction_);
  }
  return *this;
}

std::size_t AngleSchedule::capacity() const noexcept {
  switch (kind_) {
    case ScheduleKind::regular:
      return std::numeric_limits<std::size_t>::max();
    case ScheduleKind::substitution:
      return letters_->length();
    case ScheduleKind::chaotic_fibonacci:
      return table_->size();
  }
  return 0;
}

std::string AngleSchedule::label() const {
  switch (kind_) {
    case ScheduleKind::regular:
      return "regular";
    case ScheduleKind::substitution:
      return letters_->rule().name;
    case ScheduleKind::chaotic_fibonacci:
      return "cf";
  }
  return "unknown";
}

double AngleSchedule::angle(std::size_t m) const {
  if (m == 0) throw std::invalid_argument("schedule index m starts at 1");
  switch (kind_) {
    case ScheduleKind::regular:
      return alpha1_;
    case ScheduleKind::substitution:
      return letters_->letter(m) == 'a' ? alpha1_ : alpha2_;
    case ScheduleKind::chaotic_fibonacci:
      if (m > table_->size()) {
        throw CapacityError(
            fmt::format("schedule index {} exceeds capacity {}", m, table_->size()));
      }
      return (*table_)[m - 1];
  }
  return 0.0;
}

double schedule_angle(const AngleSchedule& schedule, std::size_t m) { return schedule.angle(m); }

}  // namespace qtm
