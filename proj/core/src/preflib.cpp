#include "osbop/preflib.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "osbop/errors.hpp"

namespace osbop {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long parse_long(std::string_view token, int line_number, const char* what) {
  token = trim(token);
  long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line_number) + ": bad " + what + " '" +
                     std::string(token) + "'");
  return value;
}

Item parse_voted_item(std::string_view token, int n, int line_number) {
  const long value = parse_long(token, line_number, "item");
  if (value < 1 || value > n)
    throw ParseError("line " + std::to_string(line_number) + ": item " +
                     std::to_string(value) + " outside 1.." + std::to_string(n));
  return static_cast<Item>(value);
}

/// Ranking text: top-level commas separate singleton entries, braces hold tie
/// groups, e.g. "1,{2,3},4".
std::vector<std::vector<Item>> parse_ranking(std::string_view text, int n, int line_number) {
  std::vector<std::vector<Item>> groups;
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("line " + std::to_string(line_number) + ": " + why);
  };

  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;

    if (text[pos] == '{') {
      const std::size_t close = text.find('}', pos + 1);
      if (close == std::string_view::npos) throw fail("unterminated tie group");
      std::string_view inside = text.substr(pos + 1, close - pos - 1);
      std::vector<Item> group;
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = inside.find(',', start);
        const std::string_view token = inside.substr(
            start, comma == std::string_view::npos ? comma : comma - start);
        if (trim(token).empty()) throw fail("empty item in tie group");
        group.push_back(parse_voted_item(token, n, line_number));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      groups.push_back(std::move(group));
      pos = close + 1;
    } else {
      std::size_t end = pos;
      while (end < text.size() && text[end] != ',') ++end;
      const std::string_view token = text.substr(pos, end - pos);
      if (trim(token).empty()) throw fail("empty ranking entry");
      groups.push_back({parse_voted_item(token, n, line_number)});
      pos = end;
    }

    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw fail("expected ',' in ranking");
      ++pos;
    }
  }
  if (groups.empty()) throw fail("vote without items");
  return groups;
}

// Standard PrefLib header keys we consume or deliberately pass over.
bool known_metadata(std::string_view key) {
  static constexpr std::string_view kKnown[] = {
      "FILE NAME",         "TITLE",        "DESCRIPTION",
      "DATA TYPE",         "MODIFICATION TYPE", "RELATES TO",
      "RELATED FILES",     "PUBLICATION DATE",  "MODIFICATION DATE",
      "NUMBER VOTERS",     "NUMBER UNIQUE ORDERS",
  };
  return std::find(std::begin(kKnown), std::end(kKnown), key) != std::end(kKnown);
}

}  // namespace

Profile parse_preflib(std::string_view content, std::string source_name) {
  Profile profile;
  profile.source = std::move(source_name);

  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t eol = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_number;
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;

    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '#') {
      std::string_view meta = trim(line.substr(1));
      const std::size_t colon = meta.find(':');
      if (colon == std::string_view::npos) continue;  // free-form comment
      const std::string key{trim(meta.substr(0, colon))};
      const std::string_view value = trim(meta.substr(colon + 1));

      if (key == "NUMBER ALTERNATIVES") {
        const long n = parse_long(value, line_number, "alternative count");
        if (n < 1)
          throw ParseError("line " + std::to_string(line_number) +
                           ": alternative count must be positive");
        profile.item_count = static_cast<int>(n);
        profile.alternative_names.resize(static_cast<std::size_t>(n));
      } else if (key.rfind("ALTERNATIVE NAME ", 0) == 0) {
        const long index = parse_long(key.substr(17), line_number, "alternative index");
        if (profile.item_count > 0 && index >= 1 && index <= profile.item_count)
          profile.alternative_names[static_cast<std::size_t>(index - 1)] = std::string(value);
        else
          profile.warnings.push_back("line " + std::to_string(line_number) +
                                     ": alternative name for unknown item " +
                                     std::to_string(index));
      } else if (!known_metadata(key)) {
        profile.warnings.push_back("ignored metadata '" + key + "'");
      }
      continue;
    }

    // Vote line: "multiplicity: ranking".
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_number) + ": expected 'count: ranking'");
    if (profile.item_count == 0)
      throw ParseError("line " + std::to_string(line_number) +
                       ": vote before '# NUMBER ALTERNATIVES'");

    Vote vote;
    vote.multiplicity = parse_long(line.substr(0, colon), line_number, "multiplicity");
    if (vote.multiplicity < 1)
      throw ParseError("line " + std::to_string(line_number) + ": multiplicity " +
                       std::to_string(vote.multiplicity) + " must be positive");
    vote.groups = parse_ranking(line.substr(colon + 1), profile.item_count, line_number);

    std::vector<bool> seen(static_cast<std::size_t>(profile.item_count), false);
    for (const auto& group : vote.groups)
      for (Item u : group) {
        if (seen[static_cast<std::size_t>(u - 1)])
          throw ParseError("line " + std::to_string(line_number) + ": item " +
                           std::to_string(u) + " ranked twice");
        seen[static_cast<std::size_t>(u - 1)] = true;
      }

    profile.votes.push_back(std::move(vote));
  }

  if (profile.item_count == 0)
    throw ParseError("missing '# NUMBER ALTERNATIVES' metadata");
  return profile;
}

PairOrderMatrix build_matrix(const Profile& profile) {
  const int n = profile.item_count;
  if (n < 1) throw ValidationError("profile has no items");
  if (profile.votes.empty()) throw ValidationError("profile has no votes");

  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<double> score(cells, 0.0);   // weighted u-before-v (+ half ties), upper triangle
  std::vector<double> counted(cells, 0.0); // weighted votes ranking both, upper triangle
  auto flat = [n](Item u, Item v) {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(v - 1);
  };

  std::vector<int> group_of(static_cast<std::size_t>(n));
  for (const Vote& vote : profile.votes) {
    if (vote.multiplicity < 1) throw ValidationError("vote multiplicity must be positive");
    std::fill(group_of.begin(), group_of.end(), -1);
    for (std::size_t g = 0; g < vote.groups.size(); ++g)
      for (Item u : vote.groups[g]) {
        if (u < 1 || u > n)
          throw ValidationError("vote ranks item " + std::to_string(u) + " outside 1.." +
                                std::to_string(n));
        if (group_of[static_cast<std::size_t>(u - 1)] != -1)
          throw ValidationError("vote ranks item " + std::to_string(u) + " twice");
        group_of[static_cast<std::size_t>(u - 1)] = static_cast<int>(g);
      }

    const double m = static_cast<double>(vote.multiplicity);
    for (Item u = 1; u <= n; ++u) {
      const int gu = group_of[static_cast<std::size_t>(u - 1)];
      if (gu == -1) continue;
      for (Item v = u + 1; v <= n; ++v) {
        const int gv = group_of[static_cast<std::size_t>(v - 1)];
        if (gv == -1) continue;
        counted[flat(u, v)] += m;
        if (gu < gv)
          score[flat(u, v)] += m;
        else if (gu == gv)
          score[flat(u, v)] += 0.5 * m;
      }
    }
  }

  std::vector<double> entries(cells, 0.5);
  for (Item u = 1; u <= n; ++u)
    for (Item v = u + 1; v <= n; ++v) {
      const double seen = counted[flat(u, v)];
      const double x = seen > 0.0 ? score[flat(u, v)] / seen : 0.5;
      entries[flat(u, v)] = x;
      entries[flat(v, u)] = 1.0 - x;
    }
  return PairOrderMatrix(n, std::move(entries));
}

}  // namespace osbop
