#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osbop/bucket_order.hpp"
#include "osbop/matrix.hpp"

namespace osbop {

/// One weighted vote: an ordered list of tie groups over a (possibly strict)
/// subset of the items. Items absent from every group are unranked by this
/// vote.
struct Vote {
  long multiplicity = 1;
  std::vector<std::vector<Item>> groups;
};

/// A multiset of votes plus source metadata.
struct Profile {
  int item_count = 0;
  std::vector<Vote> votes;
  std::string source;
  std::vector<std::string> alternative_names;  // index i names item i+1; may be empty
  std::vector<std::string> warnings;           // ignored metadata, one note per key
};

/// Parses a PrefLib election file (.soc / .soi / .toc / .toi): '#'-prefixed
/// metadata lines ("# NUMBER ALTERNATIVES: n", "# ALTERNATIVE NAME i: ...")
/// followed by vote lines "multiplicity: ranking" where tie groups are brace
/// delimited, e.g. "3: 1,{2,3}". Unknown metadata keys are collected as
/// warnings, never errors. ParseError messages carry the line number.
Profile parse_preflib(std::string_view content, std::string source_name = "");

/// Pair order matrix of a profile. For each unordered pair {u,v}, over the
/// votes ranking both items: a vote contributes its multiplicity to u-before-v,
/// half of it on a tie; C(u,v) is the contribution divided by the weighted
/// count of those votes. Pairs no vote ranks get 0.5. The lower triangle is
/// mirrored so the matrix is exactly complementary.
PairOrderMatrix build_matrix(const Profile& profile);

}  // namespace osbop
