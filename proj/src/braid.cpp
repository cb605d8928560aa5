#include "braidorder/braid.hpp"

#include <sstream>

namespace braidorder {

namespace {

void check_strands(int strands) {
  if (strands < 2) {
    throw StrandTooSmall("braid words need at least 2 strands, got " +
                         std::to_string(strands));
  }
}

void check_letter_range(int letter, int strands) {
  int abs = letter < 0 ? -letter : letter;
  if (abs < 1 || abs > strands - 1) {
    throw IndexOutOfRange("letter " + std::to_string(letter) +
                          " outside generator range of B_" +
                          std::to_string(strands));
  }
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands_);
  for (int letter : letters_) check_letter_range(letter, strands_);
}

bool BraidWord::is_positive() const {
  for (int letter : letters_) {
    if (letter < 0) return false;
  }
  return true;
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(-*it);
  }
  return BraidWord(strands_, std::move(out));
}

PositiveBraidWord::PositiveBraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands_);
  for (int letter : letters_) {
    if (letter < 0) {
      throw NotPositive("negative letter " + std::to_string(letter) +
                        " in a positive word");
    }
    check_letter_range(letter, strands_);
  }
}

PositiveBraidWord PositiveBraidWord::from_word(const BraidWord& w) {
  if (!w.is_positive()) {
    throw NotPositive("word '" + to_string(w) + "' has negative letters");
  }
  return PositiveBraidWord(w.strands(), w.letters());
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw StrandMismatch("concat across B_" + std::to_string(u.strands()) +
                         " and B_" + std::to_string(v.strands()));
  }
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

PositiveBraidWord concat(const PositiveBraidWord& u,
                         const PositiveBraidWord& v) {
  if (u.strands() != v.strands()) {
    throw StrandMismatch("concat across B_" + std::to_string(u.strands()) +
                         " and B_" + std::to_string(v.strands()));
  }
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return PositiveBraidWord(u.strands(), std::move(letters));
}

PositiveBraidWord flip(const PositiveBraidWord& w) {
  int n = w.strands();
  std::vector<int> letters;
  letters.reserve(w.length());
  for (int letter : w.letters()) letters.push_back(n - letter);
  return PositiveBraidWord(n, std::move(letters));
}

namespace {

std::vector<int> shifted_down_letters(const std::vector<int>& letters, int d,
                                      int strands) {
  if (d < 0) throw IndexOutOfRange("negative shift " + std::to_string(d));
  std::vector<int> out;
  out.reserve(letters.size());
  for (int letter : letters) {
    int abs = letter < 0 ? -letter : letter;
    if (abs <= d) {
      throw LetterTooSmall("letter " + std::to_string(letter) +
                           " cannot shift down by " + std::to_string(d));
    }
    out.push_back(letter < 0 ? letter + d : letter - d);
  }
  if (strands - d < 2) {
    throw StrandTooSmall("shift down by " + std::to_string(d) + " from B_" +
                         std::to_string(strands) + " leaves too few strands");
  }
  return out;
}

}  // namespace

BraidWord shift_down(const BraidWord& w, int d) {
  return BraidWord(w.strands() - d,
                   shifted_down_letters(w.letters(), d, w.strands()));
}

PositiveBraidWord shift_down(const PositiveBraidWord& w, int d) {
  return PositiveBraidWord(w.strands() - d,
                           shifted_down_letters(w.letters(), d, w.strands()));
}

PositiveBraidWord shift_up(const PositiveBraidWord& w, int d) {
  if (d < 0) throw IndexOutOfRange("negative shift " + std::to_string(d));
  std::vector<int> letters;
  letters.reserve(w.length());
  for (int letter : w.letters()) letters.push_back(letter + d);
  return PositiveBraidWord(w.strands() + d, std::move(letters));
}

PositiveBraidWord with_strands(const PositiveBraidWord& w, int strands) {
  return PositiveBraidWord(strands, w.letters());
}

PositiveBraidWord delta(int n) {
  if (n < 2) {
    throw StrandTooSmall("half twist needs at least 2 strands, got " +
                         std::to_string(n));
  }
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int top = n - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  }
  return PositiveBraidWord(n, std::move(letters));
}

PositiveBraidWord power(const PositiveBraidWord& w, int k) {
  if (k < 0) throw IndexOutOfRange("negative power " + std::to_string(k));
  std::vector<int> letters;
  letters.reserve(w.length() * static_cast<std::size_t>(k));
  for (int rep = 0; rep < k; ++rep) {
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return PositiveBraidWord(w.strands(), std::move(letters));
}

namespace {

std::string join_letters(const std::vector<int>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::vector<int> parse_letters(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error("cannot parse letter '" + token + "'");
    }
    if (used != token.size()) {
      throw Error("cannot parse letter '" + token + "'");
    }
    letters.push_back(value);
  }
  return letters;
}

}  // namespace

std::string to_string(const BraidWord& w) { return join_letters(w.letters()); }

std::string to_string(const PositiveBraidWord& w) {
  return join_letters(w.letters());
}

BraidWord parse_word(const std::string& text, int strands) {
  return BraidWord(strands, parse_letters(text));
}

PositiveBraidWord parse_positive_word(const std::string& text, int strands) {
  return PositiveBraidWord(strands, parse_letters(text));
}

}  // namespace braidorder
