#include "spectrum/prompts.hpp"

#include <algorithm>
#include <cctype>

#include "spectrum/error.hpp"

namespace spectrum {

const std::array<std::string, kNumTraits>& trait_codes() {
  static const std::array<std::string, kNumTraits> codes = {
      "O+", "O-", "C+", "C-", "E+", "E-", "A+", "A-", "N+", "N-"};
  return codes;
}

const std::string& persona_text(const std::string& trait) {
  static const std::array<std::string, kNumTraits> texts = {
      "You're open to new experiences, creative, inventive, curious, and "
      "imaginative.",
      "You prefer routine and familiarity, consistent, conventional, and "
      "cautious.",
      "You're organized, efficient, reliable, and responsible.",
      "You're flexible, spontaneous, extravagant, and careless.",
      "You're friendly, outgoing, sociable, and energetic.",
      "You're reserved, quiet, introverted, and solitary.",
      "You're cooperative, warm, friendly, and compassionate.",
      "You're competitive, detached, critical, and judgemental.",
      "You're anxious, stressed, nervous, and emotionally sensitive.",
      "You're calm, stable, confident, and emotionally resilient."};
  const auto& codes = trait_codes();
  for (int i = 0; i < kNumTraits; ++i) {
    if (codes[i] == trait) return texts[i];
  }
  throw InvalidTraitError("unknown trait code: " + trait);
}

const std::string& task_definition(const LabelScheme& scheme) {
  static const std::string six =
      "Assuming s1 is true, choose the statement that seems most accurate "
      "for s2:\n"
      "A. Absolutely must be false\n"
      "B. Is more likely to be false\n"
      "C. Has strong reasons to be true and strong reasons to be false\n"
      "D. Has no reasons to be either true or false\n"
      "E. Is more likely to be true\n"
      "F. Absolutely must be true";
  static const std::string three =
      "Choose one option about the inferential relationship between s1 and "
      "s2:\n"
      "Entailment: s2 entails s1\n"
      "Contradiction: s2 contradicts s1\n"
      "Neutral: Cannot pick either of the above or both are likely";
  return scheme.kind == SchemeKind::SixWay ? six : three;
}

std::string build_base_prompt(const LabelScheme& scheme) {
  return task_definition(scheme) +
         " Pick exactly one option and write it on the first line. Do not "
         "write anything else.";
}

std::string build_personality_prompt(const std::string& trait,
                                     const LabelScheme& scheme) {
  // The persona sentence carries its own terminal period.
  return "Here’s your personality: " + persona_text(trait) +
         " Focus on this personality and respond just like a person who has "
         "this personality. " +
         task_definition(scheme) +
         " Pick the first answer that you think of based on your personality "
         "and nothing else. Pick exactly one option and write it on the "
         "first line. Do not write anything else.";
}

std::string build_user_prompt(const Item& item) {
  validate_item(item);
  return "s1: " + item.premise + "\ns2: " + item.conclusion;
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

// trims whitespace plus leading/trailing ASCII punctuation
std::string strip(const std::string& s) {
  auto is_junk = [](unsigned char c) {
    return std::isspace(c) || (std::ispunct(c) && c != '\0');
  };
  std::size_t b = 0, e = s.size();
  while (b < e && is_junk(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_junk(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string first_nonempty_line(const std::string& text) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos
                                            ? std::string::npos
                                            : nl - pos);
    std::string trimmed = strip(line);
    if (!trimmed.empty()) return line;
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return "";
}

}  // namespace

std::string parse_vote(const std::string& response,
                       const LabelScheme& scheme) {
  std::string line = strip(first_nonempty_line(response));
  if (!line.empty()) {
    std::string lo = lower(line);
    for (const auto& label : scheme.labels) {
      std::string code = lower(label.code);
      std::string text = lower(strip(label.text));
      if (lo == code || lo == text) return label.code;
      // canonical "code. text" / "code: text" renderings
      if (lo == code + ". " + text || lo == code + ": " + text ||
          lo == code + "." + text || lo == code + ":" + text) {
        return label.code;
      }
    }
  }
  std::string shown = response.substr(0, 80);
  throw UnparseableResponseError("cannot parse vote from response: \"" +
                                 shown + "\"");
}

}  // namespace spectrum
