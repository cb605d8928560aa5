#include "braidorder/cutting.hpp"

#include <sstream>

namespace braidorder {

CuttingSequence::CuttingSequence(int punctures_in, std::vector<int> entries_in)
    : punctures(punctures_in), entries(std::move(entries_in)) {
  if (punctures < 2) {
    throw StrandTooSmall("cutting sequences need at least 2 punctures, got " +
                         std::to_string(punctures));
  }
  for (int entry : entries) {
    int wall = entry < 0 ? -entry : entry;
    if (wall < 1 || wall > punctures + 1) {
      throw IndexOutOfRange("wall " + std::to_string(entry) +
                            " outside [1, " + std::to_string(punctures + 1) +
                            "]");
    }
  }
}

CuttingSequence apply_generator(const CuttingSequence& c, int j) {
  if (j < 1 || j > c.punctures - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(j) +
                          " outside [1, " + std::to_string(c.punctures - 1) +
                          "]");
  }
  int target = j + 1;
  std::vector<int> out;
  out.reserve(c.entries.size() * 3);
  for (int entry : c.entries) {
    if (entry == target) {
      out.push_back(j);
      out.push_back(-(j + 1));
      out.push_back(j + 2);
    } else if (entry == -target) {
      out.push_back(-(j + 2));
      out.push_back(j + 1);
      out.push_back(-j);
    } else {
      out.push_back(entry);
    }
  }
  return CuttingSequence(c.punctures, std::move(out));
}

CuttingSequence tighten(const CuttingSequence& c) {
  std::vector<int> stack;
  stack.reserve(c.entries.size());
  for (int entry : c.entries) {
    if (!stack.empty() && stack.back() == -entry) {
      stack.pop_back();
    } else {
      stack.push_back(entry);
    }
  }
  return CuttingSequence(c.punctures, std::move(stack));
}

CuttingSequence act(const PositiveBraidWord& w, const CuttingSequence& c) {
  if (w.strands() != c.punctures) {
    throw StrandMismatch("word on " + std::to_string(w.strands()) +
                         " strands acting on " + std::to_string(c.punctures) +
                         " punctures");
  }
  CuttingSequence current = c;
  const std::vector<int>& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    current = apply_generator(current, *it);
  }
  return tighten(current);
}

CuttingSequence gamma1(const Arrangement& a) {
  return CuttingSequence(a.strands(), {a.k(1) + 1});
}

std::string to_string(const CuttingSequence& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    if (i) out += ',';
    out += (c.entries[i] > 0 ? "+" : "") + std::to_string(c.entries[i]);
  }
  out += ")";
  return out;
}

CuttingSequence parse_cutting_sequence(const std::string& text,
                                       int punctures) {
  std::string body = text;
  bool opened = !body.empty() && body.front() == '(';
  bool closed = body.size() >= 2 && body.back() == ')';
  if (opened != closed) {
    throw Error("unbalanced parentheses in cutting sequence '" + text + "'");
  }
  if (opened) body = body.substr(1, body.size() - 2);
  if (!body.empty() && body.back() == ',') {
    throw Error("trailing comma in cutting sequence '" + text + "'");
  }
  std::vector<int> entries;
  if (!body.empty()) {
    std::istringstream in(body);
    std::string token;
    while (std::getline(in, token, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw Error("cannot parse crossing '" + token + "'");
      }
      if (used != token.size()) {
        throw Error("cannot parse crossing '" + token + "'");
      }
      entries.push_back(value);
    }
  }
  return CuttingSequence(punctures, std::move(entries));
}

}  // namespace braidorder
