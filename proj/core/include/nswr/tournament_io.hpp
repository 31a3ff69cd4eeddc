// Copyright 2026 The nswr Authors
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

#ifndef NSWR_TOURNAMENT_IO_HPP
#define NSWR_TOURNAMENT_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nswr/query_table.hpp"

namespace nswr {

/// Parse or validation failure in a tournament file; line is 1-based and 0
/// for whole-file problems such as a missing pair.
class TournamentFormatError : public std::runtime_error {
public:
    TournamentFormatError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

/// A tournament together with the item names that appeared in the file.
/// Indices follow first appearance order: the first item named on the first
/// data row is item 0, and so on.
struct NamedTournament {
    QueryTable table;
    std::vector<std::string> items;
};

/// Reads the tournament CSV format:
///
///   item_a,item_b,outcome
///   alice,bob,+
///   carol,alice,-1
///
/// Exactly one row per unordered pair. The first-named item is the claimed
/// winner under "+" (or "1"); "-" ("-1") claims the second-named item larger.
/// A repeated pair with a consistent outcome is tolerated; a contradictory
/// repeat, a self-comparison, a malformed row, or a missing pair raises
/// TournamentFormatError with the offending line number.
NamedTournament load_tournament_csv(std::istream& in);
NamedTournament load_tournament_csv_file(const std::string& path);

/// Writes the same format, one row per pair (i < j by index, "+" when the
/// table claims item i larger). Default names are item_1..item_n.
void write_tournament_csv(std::ostream& out, const QueryTable& q,
                          const std::vector<std::string>* names = nullptr);

}  // namespace nswr

#endif  // NSWR_TOURNAMENT_IO_HPP
