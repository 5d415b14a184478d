#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "spectrum/backend.hpp"
#include "spectrum/labels.hpp"
#include "spectrum/rng.hpp"

namespace spectrum {

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::string after_marker(const std::string& text, const std::string& marker) {
  auto pos = text.find(marker);
  if (pos == std::string::npos) return "";
  return text.substr(pos + marker.size());
}

std::string first_line(const std::string& s) {
  auto nl = s.find('\n');
  return nl == std::string::npos ? s : s.substr(0, nl);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

const std::vector<std::string>& name_pool() {
  static const std::vector<std::string> v = {
      "Amara", "Bruno",  "Carys",  "Dmitri", "Elif",   "Farid",  "Greta",
      "Hiro",  "Imani",  "Jonas",  "Keiko",  "Lorenzo", "Mireille",
      "Nadia", "Otieno", "Priya",  "Quentin", "Rosa",   "Sven",   "Tala"};
  return v;
}

const std::vector<std::string>& phrase_pool() {
  static const std::vector<std::string> v = {
      "the town fair",        "remote work",       "the new bridge",
      "community gardening",  "late-night traffic", "the reading club",
      "street art",           "the night market",  "river cleanups",
      "rooftop concerts",     "rising rents",      "local elections",
      "the chess league",     "bicycle lanes",     "the harvest festival",
      "open data portals"};
  return v;
}

const std::vector<std::string>& quality_pool() {
  static const std::vector<std::string> v = {
      "methodical", "patient",   "restless", "meticulous", "stubborn",
      "observant",  "talkative", "punctual", "forgetful",  "resourceful"};
  return v;
}

std::string pick(const std::vector<std::string>& pool, std::uint64_t h) {
  return pool[h % pool.size()];
}

// ---- voting prompts -------------------------------------------------------

// Gives every prompt style a stable ordinal bias around an item-dependent
// center, so persona ensembles produce non-degenerate mixtures.
std::string vote_response(const std::string& system_prompt,
                          const std::string& user_prompt, std::uint64_t seed,
                          const LabelScheme& scheme) {
  std::uint64_t item_h = fnv1a(user_prompt);
  std::uint64_t style_h = fnv1a(system_prompt);
  double k = scheme.size;
  double center = 1.0 + (static_cast<double>(item_h % 9973) / 9972.0) * (k - 1);
  double shift =
      (static_cast<double>((style_h >> 7) % 5) - 2.0) * (k >= 6 ? 0.55 : 0.3);
  Rng rng(fnv1a_mix(fnv1a_mix(item_h, style_h), seed));
  double draw = center + shift + rng.normal() * (k >= 6 ? 0.9 : 0.5);
  int ordinal = std::clamp(static_cast<int>(std::lround(draw)), 1,
                           scheme.size);
  const auto& label = scheme.labels[ordinal - 1];
  switch (rng.uniform_int(5)) {
    case 0:
      return label.code + ". " + label.text;
    case 1: {
      std::string lo = label.code;
      std::transform(lo.begin(), lo.end(), lo.begin(), ::tolower);
      return lo;
    }
    default:
      return label.code;
  }
}

// ---- generation prompts ---------------------------------------------------

// Splits a template on [bracketed] slots; returns literal chunks and names.
void split_template(const std::string& tpl, std::vector<std::string>* chunks,
                    std::vector<std::string>* names) {
  std::size_t pos = 0;
  for (;;) {
    auto open = tpl.find('[', pos);
    if (open == std::string::npos) break;
    auto close = tpl.find(']', open);
    if (close == std::string::npos) break;
    chunks->push_back(tpl.substr(pos, open - pos));
    names->push_back(tpl.substr(open + 1, close - open - 1));
    pos = close + 1;
  }
  chunks->push_back(tpl.substr(pos));
}

// Recovers slot values by aligning a filled template with its pattern.
std::vector<std::string> align_fills(const std::string& tpl,
                                     const std::string& filled) {
  std::vector<std::string> chunks, names, values;
  split_template(tpl, &chunks, &names);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    pos += chunks[i].size();
    std::size_t end;
    if (i + 1 < chunks.size() && !chunks[i + 1].empty()) {
      end = filled.find(chunks[i + 1], pos);
      if (end == std::string::npos) end = filled.size();
    } else {
      end = filled.size();
    }
    values.push_back(pos <= filled.size()
                         ? trim(filled.substr(pos, end - pos))
                         : "");
    pos = end;
  }
  return values;
}

std::string fill_template(const std::string& tpl,
                          const std::vector<std::string>& names,
                          const std::vector<std::string>& values) {
  std::vector<std::string> chunks, tnames;
  split_template(tpl, &chunks, &tnames);
  std::string out = chunks[0];
  for (std::size_t i = 0; i < tnames.size(); ++i) {
    std::string v;
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (names[j] == tnames[i]) {
        v = values[j];
        break;
      }
    }
    if (v.empty() && i < values.size()) v = values[i];  // positional fallback
    out += v;
    out += chunks[i + 1];
  }
  return out;
}

std::string remove_word(const std::string& sentence, const std::string& word) {
  if (word.empty()) return sentence;
  std::string out = sentence;
  for (;;) {
    auto pos = out.find(word);
    if (pos == std::string::npos) break;
    out.erase(pos, word.size());
  }
  // collapse doubled spaces left behind
  std::string collapsed;
  bool prev_space = false;
  for (char c : out) {
    bool space = c == ' ';
    if (!(space && prev_space)) collapsed += c;
    prev_space = space;
  }
  return trim(collapsed);
}

}  // namespace

std::string MockBackend::complete(const std::string& system_prompt,
                                  const std::string& user_prompt,
                                  double /*temperature*/,
                                  std::uint64_t seed) const {
  std::uint64_t h = fnv1a_mix(
      fnv1a(user_prompt, fnv1a(system_prompt)), seed);

  // NLI voting
  if (contains(system_prompt, "Assuming s1 is true")) {
    return vote_response(system_prompt, user_prompt, seed, six_way());
  }
  if (contains(system_prompt,
               "Choose one option about the inferential relationship")) {
    return vote_response(system_prompt, user_prompt, seed, three_way());
  }

  // rephrasing: echo the sentence back
  if (contains(system_prompt, "Steve will give you a sentence") &&
      contains(system_prompt, "rephrase")) {
    return trim(after_marker(user_prompt, "Sentence: "));
  }

  // fallacy premise slots: answer "Name: value" per bracketed slot
  if (starts_with(system_prompt, "You will get a template. Fill")) {
    std::string tpl = trim(after_marker(user_prompt, "Template: "));
    std::vector<std::string> chunks, names;
    split_template(tpl, &chunks, &names);
    std::ostringstream out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out << '\n';
      out << names[i] << ": "
          << pick(phrase_pool(), fnv1a(names[i], h) + 3 * i);
    }
    return out.str();
  }

  // fallacy conclusion: fill template 2 with the slot values recovered from
  // filled template 1
  if (starts_with(system_prompt, "You will get a template (Template 1)")) {
    std::string t1 = trim(first_line(after_marker(user_prompt, "Template 1: ")));
    std::string f1 =
        trim(first_line(after_marker(user_prompt, "Filled Template 1: ")));
    std::string t2 = trim(first_line(after_marker(user_prompt, "Template 2: ")));
    std::vector<std::string> chunks, names;
    split_template(t1, &chunks, &names);
    return fill_template(t2, names, align_fills(t1, f1));
  }

  // StereoNLI premise paragraph
  if (starts_with(system_prompt, "Come up with a name for X")) {
    std::string details = trim(after_marker(user_prompt, "Details about X: "));
    std::string name = pick(name_pool(), h);
    std::ostringstream out;
    out << name << " is known around the neighborhood as " << details << ". "
        << name << " spends most mornings at work and most evenings with "
        << "family. People say " << name << " is "
        << pick(quality_pool(), h >> 13) << " and rarely misses an "
        << "appointment.";
    return out.str();
  }

  // StereoNLI conclusions (no system prompt, user-driven)
  if (starts_with(user_prompt, "Here's a paragraph about X: ")) {
    std::string para = after_marker(user_prompt, "Here's a paragraph about X: ");
    std::string subject = first_line(para).substr(0, para.find(' '));
    std::string detail =
        trim(first_line(after_marker(user_prompt, "Detail about X: ")));
    if (!detail.empty() && detail.back() == '.') detail.pop_back();
    if (contains(user_prompt, "must be false")) {
      return subject + " has never had anything to do with " + detail + ".";
    }
    return subject + " is closely connected to " + detail + ".";
  }
  if (starts_with(user_prompt, "Here're two stories:")) {
    std::string story2 =
        trim(first_line(after_marker(user_prompt, "STORY 2: ")));
    std::string stmt = trim(
        first_line(after_marker(user_prompt, "statement about story 1: ")));
    std::string subject = story2.substr(0, story2.find(' '));
    auto space = stmt.find(' ');
    if (space == std::string::npos) return subject;
    return subject + stmt.substr(space);
  }

  // syllogism premise candidates
  if (contains(system_prompt, "Steve gives you a word and a template")) {
    std::string seed_word = trim(first_line(
        after_marker(user_prompt, "The sentence is about ")));
    if (auto cut = seed_word.find(" (singular/plural)");
        cut != std::string::npos) {
      seed_word = seed_word.substr(0, cut);
    }
    bool at_beginning = contains(user_prompt, "the beginning of the sentence");
    int n = 3;
    if (auto mpos = user_prompt.find("write "); mpos != std::string::npos) {
      n = std::max(1, atoi(user_prompt.c_str() + mpos + 6));
    }
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
      if (i) out << '\n';
      std::string other = pick(phrase_pool(), h + 17 * i);
      if (at_beginning) {
        out << "Every " << seed_word << " is drawn to " << other << ".";
      } else {
        out << "Anyone involved in " << other << " is a " << seed_word << ".";
      }
    }
    return out.str();
  }

  // syllogism conclusion: combine the pair, dropping the seed word
  if (contains(system_prompt, "Steve will give you a pair of sentences")) {
    std::string body = after_marker(user_prompt, "Sentence Pair:\n");
    std::string s1 = trim(first_line(body));
    std::string rest = after_marker(body, "\n");
    std::string s2 = trim(first_line(rest));
    std::string seed_word =
        trim(first_line(after_marker(user_prompt, "Seed word: ")));
    std::string a = remove_word(s1, seed_word);
    std::string b = remove_word(s2, seed_word);
    if (!a.empty() && a.back() == '.') a.pop_back();
    return a + ", so " + b;
  }

  // guilt: crime scene paragraph
  if (contains(user_prompt, "describing the details of a crime")) {
    std::string place = pick(phrase_pool(), h);
    std::string detail = pick(phrase_pool(), h >> 9);
    return "Late one evening, a break-in was reported near " + place +
           ". The intruder forced a side door, took a locked cashbox, and "
           "left before anyone arrived. Witnesses only recall a figure "
           "hurrying away past " + detail +
           ". The police have not identified the perpetrator.";
  }

  // guilt: culprit feature list
  if (contains(user_prompt, "features likely to be true of the culprit")) {
    std::ostringstream out;
    const char* features[5] = {
        "is familiar with the neighborhood", "owns a crowbar or similar tool",
        "has been seen near the building after hours",
        "knows when the office is empty", "has a record of petty theft"};
    for (int i = 0; i < 5; ++i) {
      if (i) out << '\n';
      out << features[i];
    }
    return out.str();
  }

  // guilt: suspect sketch
  if (contains(user_prompt, "introducing a suspect named ")) {
    std::string name = trim(first_line(
        after_marker(user_prompt, "introducing a suspect named ")));
    if (auto cut = name.find(' '); cut != std::string::npos) {
      name = name.substr(0, cut);
    }
    if (!name.empty() && (name.back() == ',' || name.back() == '.')) {
      name.pop_back();
    }
    if (contains(user_prompt, "does not have")) {
      return "The main suspect, " + name +
             ", has none of these traits and had never visited the area "
             "before that week.";
    }
    return "The main suspect, " + name +
           ", matches this profile closely and was seen nearby that night.";
  }

  // primacy/recency sentence lists
  if (contains(user_prompt, "would likely be true") ||
      contains(user_prompt, "would likely not be true")) {
    bool negative = contains(user_prompt, "not be true");
    std::string about =
        trim(first_line(after_marker(user_prompt, "about an individual: ")));
    std::string subject = about.substr(0, about.find(' '));
    const char* pos_templates[5] = {
        "%s spends long hours practicing the craft.",
        "%s keeps a detailed calendar of commitments.",
        "%s is often asked for advice by newcomers.",
        "%s reads widely about the field.",
        "Finally, %s mentors several younger colleagues."};
    const char* neg_templates[5] = {
        "%s rarely shows up to related events.",
        "%s has little patience for the day-to-day routine.",
        "%s spends most afternoons on unrelated hobbies.",
        "%s avoids talking shop whenever possible.",
        "%s keeps no records of past work."};
    std::ostringstream out;
    for (int i = 0; i < 5; ++i) {
      if (i) out << '\n';
      const char* tpl = negative ? neg_templates[i] : pos_templates[i];
      std::string line = tpl;
      line.replace(line.find("%s"), 2, subject);
      out << line;
    }
    return out.str();
  }

  // fallback: deterministic echo
  return "OK " + std::to_string(h % 100000);
}

}  // namespace spectrum
