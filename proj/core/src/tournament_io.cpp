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

#include "nswr/tournament_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace nswr {

TournamentFormatError::TournamentFormatError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

// Splits on commas; items may not contain commas (the format has no quoting).
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

int parse_outcome(const std::string& token, int line_no) {
    if (token == "+" || token == "1") return +1;
    if (token == "-" || token == "-1") return -1;
    throw TournamentFormatError(line_no, "bad outcome token \"" + token + "\" (want +, -, 1 or -1)");
}

}  // namespace

NamedTournament load_tournament_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw TournamentFormatError(1, "empty file, expected header item_a,item_b,outcome");
    }
    if (strip_cr(line) != "item_a,item_b,outcome") {
        throw TournamentFormatError(1, "bad header, expected item_a,item_b,outcome");
    }

    std::vector<std::string> items;
    std::unordered_map<std::string, int> index_of;
    auto intern = [&](const std::string& name) {
        auto it = index_of.find(name);
        if (it != index_of.end()) return it->second;
        const int idx = static_cast<int>(items.size());
        items.push_back(name);
        index_of.emplace(name, idx);
        return idx;
    };

    // Outcome per unordered pair, stored relative to (hi, lo) orientation.
    std::map<std::pair<int, int>, int> seen;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 3) {
            throw TournamentFormatError(line_no, "expected 3 fields, got " +
                                                     std::to_string(fields.size()));
        }
        if (fields[0].empty() || fields[1].empty()) {
            throw TournamentFormatError(line_no, "empty item name");
        }
        const int a = intern(fields[0]);
        const int b = intern(fields[1]);
        if (a == b) {
            throw TournamentFormatError(line_no, "self-comparison of \"" + fields[0] + "\"");
        }
        const int outcome = parse_outcome(fields[2], line_no);
        const int hi = a > b ? a : b;
        const int lo = a > b ? b : a;
        const int canonical = a > b ? outcome : -outcome;  // outcome of (hi vs lo)
        auto [it, inserted] = seen.emplace(std::make_pair(hi, lo), canonical);
        if (!inserted && it->second != canonical) {
            throw TournamentFormatError(line_no, "contradictory repeat of pair \"" + fields[0] +
                                                     "\" vs \"" + fields[1] + "\"");
        }
    }

    const int n = static_cast<int>(items.size());
    if (n < 2) {
        throw TournamentFormatError(0, "tournament needs at least two items");
    }
    const long long expected = static_cast<long long>(n) * (n - 1) / 2;
    if (static_cast<long long>(seen.size()) != expected) {
        for (int i = 1; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                if (!seen.count({i, j})) {
                    throw TournamentFormatError(
                        0, "incomplete tournament: missing pair \"" + items[j] + "\" vs \"" +
                               items[i] + "\" (" + std::to_string(seen.size()) + " of " +
                               std::to_string(expected) + " pairs present)");
                }
            }
        }
    }

    NamedTournament result{QueryTable(n), std::move(items)};
    for (const auto& [pair, outcome] : seen) {
        result.table.set(pair.first, pair.second, outcome);
    }
    return result;
}

NamedTournament load_tournament_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open tournament file: " + path);
    }
    return load_tournament_csv(in);
}

void write_tournament_csv(std::ostream& out, const QueryTable& q,
                          const std::vector<std::string>* names) {
    if (names && static_cast<int>(names->size()) != q.items()) {
        throw std::invalid_argument("write_tournament_csv: name count mismatch");
    }
    auto name_of = [&](int i) {
        return names ? (*names)[i] : "item_" + std::to_string(i + 1);
    };
    out << "item_a,item_b,outcome\n";
    for (int i = 0; i < q.items(); ++i) {
        for (int j = i + 1; j < q.items(); ++j) {
            out << name_of(i) << "," << name_of(j) << ","
                << (q.query(i, j) > 0 ? "+" : "-") << "\n";
        }
    }
}

}  // namespace nswr
