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

#include "nswr/window_dp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace nswr {
namespace {

constexpr Score kNoAssignment = std::numeric_limits<Score>::min();
constexpr long long kMaxCandidateSets = 1LL << 22;

// C(n, r), saturating above cap.
long long choose_capped(int n, int r, long long cap) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long c = 1;
    for (int i = 1; i <= r; ++i) {
        c = c * (n - r + i) / i;  // exact at every step
        if (c > cap) return cap + 1;
    }
    return c;
}

struct Entry {
    std::uint64_t mask;  // selected zone elements, bit index = zone position
    Score score;
    std::int32_t left_entry;
    std::int32_t right_entry;
};

struct Node {
    int lo = 0, hi = 0;  // output ranks covered, inclusive
    int mid = 0;         // top rank of the lower half
    int left = -1, right = -1;
    int mand_lo = 0, mand_hi = -1;  // initial ranks forced into this interval
    std::vector<int> zone;          // undecided initial ranks, ascending
    std::vector<Entry> entries;     // ascending mask
};

// Elements are relabelled by their rank in `initial`; the DP assigns output
// rank p an element e with |e - p| <= k. An interval [lo, hi] must contain
// every e in [lo+k, hi-k] (mandatory) and may only contain e in
// [lo-k, hi+k]; the rest of that range is the interval's zone, at most 4k
// elements, so a candidate occupying set is (mandatory) + (zone subset).
class Solver {
public:
    Solver(ComparisonSource& source, const Ranking& initial, int window)
        : source_(source),
          initial_(initial),
          n_(initial.size()),
          k_(window),
          words_((initial.size() + 63) / 64) {}

    PresortedResult run() {
        if (k_ < 0) throw std::invalid_argument("sort_presorted: window must be nonnegative");
        if (source_.items() != n_)
            throw std::invalid_argument("sort_presorted: source and initial ranking disagree on item count");
        if (n_ == 0) return {initial_, 0, stats_};
        if (std::min(4LL * k_, static_cast<long long>(n_)) > 60)
            throw std::invalid_argument(
                "sort_presorted: window " + std::to_string(k_) + " on " + std::to_string(n_) +
                " items needs interval boundary sets over more than 60 elements");

        build_rows();
        build(0, n_ - 1);
        stats_.intervals = static_cast<int>(nodes_.size());

        members_.reserve(n_);
        sl_.assign(words_, 0);
        all_.assign(words_, 0);
        base_left_.assign(words_, 0);
        for (int i = static_cast<int>(nodes_.size()) - 1; i >= 0; --i) solve(nodes_[i]);

        // Root spans every rank, so its zone is fully selected: one entry.
        const Node& root = nodes_[0];
        if (root.entries.size() != 1 || root.entries[0].score == kNoAssignment)
            throw std::logic_error("sort_presorted: root interval lost its occupying set");

        std::vector<int> elements;
        elements.reserve(n_);
        reconstruct(0, 0, elements);
        std::vector<int> order(n_);
        for (int p = 0; p < n_; ++p) order[p] = initial_.item_at(elements[p]);
        return {Ranking::from_order(order), root.entries[0].score, stats_};
    }

private:
    static void set_bit(std::vector<std::uint64_t>& bits, int p) {
        bits[p >> 6] |= 1ULL << (p & 63);
    }
    static bool test_bit(const std::vector<std::uint64_t>& bits, int p) {
        return bits[p >> 6] >> (p & 63) & 1;
    }

    // One comparison per unordered pair, asked in a fixed order.
    void build_rows() {
        rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (int x = 0; x < n_; ++x) {
            for (int y = x + 1; y < n_; ++y) {
                const int o = source_.compare(initial_.item_at(x), initial_.item_at(y));
                if (o > 0)
                    set_bit_row(x, y);
                else
                    set_bit_row(y, x);
            }
        }
    }
    void set_bit_row(int x, int y) {
        rows_[static_cast<std::size_t>(x) * words_ + (y >> 6)] |= 1ULL << (y & 63);
    }

    int build(int lo, int hi) {
        const int idx = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        {
            Node& nd = nodes_[idx];
            nd.lo = lo;
            nd.hi = hi;
            nd.mand_lo = lo + k_;
            nd.mand_hi = hi - k_;
            const int ip_lo = std::max(0, lo - k_);
            const int ip_hi = std::min(n_ - 1, hi + k_);
            for (int p = ip_lo; p <= ip_hi; ++p)
                if (p < nd.mand_lo || p > nd.mand_hi) nd.zone.push_back(p);

            const int mand = std::max(0, nd.mand_hi - nd.mand_lo + 1);
            const int need = (hi - lo + 1) - mand;
            const int zone_size = static_cast<int>(nd.zone.size());
            const long long count = choose_capped(zone_size, need, kMaxCandidateSets);
            if (count > kMaxCandidateSets)
                throw std::invalid_argument(
                    "sort_presorted: ranks [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] admit more than " + std::to_string(kMaxCandidateSets) +
                    " candidate sets; reduce the window");

            nd.entries.reserve(static_cast<std::size_t>(count));
            std::uint64_t m = (need == 0) ? 0 : (~0ULL >> (64 - need));
            while (true) {
                nd.entries.push_back(Entry{m, kNoAssignment, -1, -1});
                if (need == 0) break;
                const std::uint64_t c = m & (~m + 1);  // Gosper: next same-popcount mask
                const std::uint64_t r = m + c;
                m = (((r ^ m) >> 2) / c) | r;
                if (m >> zone_size) break;
            }
            stats_.max_candidate_sets =
                std::max(stats_.max_candidate_sets, static_cast<int>(nd.entries.size()));
            stats_.total_candidate_sets += static_cast<long long>(nd.entries.size());
        }
        if (lo < hi) {
            const int mid = lo + (hi - lo + 2) / 2 - 1;  // lower half is the ceiling half
            const int l = build(lo, mid);
            const int r = build(mid + 1, hi);
            nodes_[idx].mid = mid;
            nodes_[idx].left = l;
            nodes_[idx].right = r;
        }
        return idx;
    }

    void solve(Node& nd) {
        if (nd.left < 0) {
            for (Entry& e : nd.entries) e.score = 0;
            return;
        }
        const Node& lc = nodes_[nd.left];
        const Node& rc = nodes_[nd.right];
        const int len = nd.hi - nd.lo + 1;
        const int left_len = nd.mid - nd.lo + 1;

        for (Entry& ent : nd.entries) {
            // Occupying set in ascending element order: the zone is split by
            // the contiguous mandatory run, so selected-low + mandatory +
            // selected-high is already sorted.
            members_.clear();
            std::size_t zi = 0;
            for (; zi < nd.zone.size() && nd.zone[zi] < nd.mand_lo; ++zi)
                if (ent.mask >> zi & 1) members_.push_back(nd.zone[zi]);
            for (int p = nd.mand_lo; p <= nd.mand_hi; ++p) members_.push_back(p);
            for (; zi < nd.zone.size(); ++zi)
                if (ent.mask >> zi & 1) members_.push_back(nd.zone[zi]);

            // Elements at most mid-k must go low, at least mid+k+1 must go
            // high; the g elements between may go either side.
            const auto beg = members_.begin(), end = members_.end();
            const int a = static_cast<int>(std::lower_bound(beg, end, nd.mid - k_ + 1) - beg);
            const int b = static_cast<int>(std::upper_bound(beg, end, nd.mid + k_) - beg);
            const int g = b - a;
            const int f = left_len - a;  // free elements that must still go low
            if (f < 0 || f > g) continue;

            std::fill(base_left_.begin(), base_left_.end(), 0);
            std::fill(all_.begin(), all_.end(), 0);
            for (int i = 0; i < a; ++i) set_bit(base_left_, members_[i]);
            for (const int m : members_) set_bit(all_, m);

            Score best = kNoAssignment;
            std::int32_t best_l = -1, best_r = -1;

            std::uint64_t sel = (f == 0) ? 0 : (~0ULL >> (64 - f));
            while (true) {
                ++stats_.split_evaluations;
                std::copy(base_left_.begin(), base_left_.end(), sl_.begin());
                for (int t = 0; t < g; ++t)
                    if (sel >> t & 1) set_bit(sl_, members_[a + t]);
                stats_.cross_word_ops += words_;

                std::uint64_t lm = 0;
                for (std::size_t z = 0; z < lc.zone.size(); ++z)
                    if (test_bit(sl_, lc.zone[z])) lm |= 1ULL << z;
                std::uint64_t rm = 0;
                for (std::size_t z = 0; z < rc.zone.size(); ++z) {
                    const int p = rc.zone[z];
                    if (test_bit(all_, p) && !test_bit(sl_, p)) rm |= 1ULL << z;
                }

                const Entry& le = lc.entries[find_entry(lc, lm)];
                const Entry& re = rc.entries[find_entry(rc, rm)];
                if (le.score != kNoAssignment && re.score != kNoAssignment) {
                    // Cross pairs: every high element x against the low set.
                    Score plus = 0;
                    for (int t = 0; t < g; ++t)
                        if (!(sel >> t & 1)) plus += row_popcount(members_[a + t]);
                    for (int i = b; i < len; ++i) plus += row_popcount(members_[i]);
                    const Score cross =
                        2 * plus - static_cast<Score>(len - left_len) * left_len;
                    const Score cand = le.score + re.score + cross;
                    if (cand > best) {
                        best = cand;
                        best_l = find_entry(lc, lm);
                        best_r = find_entry(rc, rm);
                    }
                }

                if (f == 0) break;
                const std::uint64_t c = sel & (~sel + 1);
                const std::uint64_t r = sel + c;
                sel = (((r ^ sel) >> 2) / c) | r;
                if (g >= 64 || sel >> g) break;
            }
            ent.score = best;
            ent.left_entry = best_l;
            ent.right_entry = best_r;
        }
    }

    Score row_popcount(int x) {
        const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(x) * words_;
        int pc = 0;
        for (int w = 0; w < words_; ++w) pc += std::popcount(row[w] & sl_[w]);
        stats_.cross_word_ops += words_;
        return pc;
    }

    int find_entry(const Node& nd, std::uint64_t mask) const {
        const auto it = std::lower_bound(
            nd.entries.begin(), nd.entries.end(), mask,
            [](const Entry& e, std::uint64_t m) { return e.mask < m; });
        if (it == nd.entries.end() || it->mask != mask)
            throw std::logic_error("sort_presorted: candidate set lookup failed");
        return static_cast<int>(it - nd.entries.begin());
    }

    void reconstruct(int node, int entry, std::vector<int>& out) const {
        const Node& nd = nodes_[node];
        const Entry& e = nd.entries[entry];
        if (nd.left < 0) {
            out.push_back(e.mask == 0 ? nd.mand_lo : nd.zone[std::countr_zero(e.mask)]);
            return;
        }
        reconstruct(nd.left, e.left_entry, out);
        reconstruct(nd.right, e.right_entry, out);
    }

    ComparisonSource& source_;
    const Ranking& initial_;
    const int n_;
    const int k_;
    const int words_;
    std::vector<std::uint64_t> rows_;  // bit y of row x: x reported above y
    std::vector<Node> nodes_;
    WindowDpStats stats_;

    std::vector<int> members_;
    std::vector<std::uint64_t> sl_, all_, base_left_;
};

}  // namespace

PresortedResult sort_presorted(ComparisonSource& source, const Ranking& initial, int window) {
    return Solver(source, initial, window).run();
}

PresortedResult sort_presorted(const QueryTable& q, const Ranking& initial, int window) {
    TableSource src(q);
    return Solver(src, initial, window).run();
}

}  // namespace nswr
