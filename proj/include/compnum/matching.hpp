#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace compnum {

// Hopcroft-Karp maximum matching. Left vertices 0..nl-1, right 0..nr-1,
// adj[l] lists the right vertices available to l.
class BipartiteMatcher {
public:
    BipartiteMatcher(int nl, int nr, std::vector<std::vector<int>> adj)
        : nl_(nl), nr_(nr), adj_(std::move(adj)) {}

    /// Returns the matching size; pairing retrievable via match_left().
    int solve() {
        match_l_.assign(nl_, -1);
        match_r_.assign(nr_, -1);
        int matched = 0;
        while (bfs()) {
            for (int l = 0; l < nl_; ++l)
                if (match_l_[l] < 0 && dfs(l)) ++matched;
        }
        return matched;
    }

    const std::vector<int>& match_left() const { return match_l_; }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        std::queue<int> q;
        dist_.assign(nl_, kInf);
        for (int l = 0; l < nl_; ++l)
            if (match_l_[l] < 0) {
                dist_[l] = 0;
                q.push(l);
            }
        bool reachable = false;
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj_[l]) {
                int l2 = match_r_[r];
                if (l2 < 0) {
                    reachable = true;
                } else if (dist_[l2] == kInf) {
                    dist_[l2] = dist_[l] + 1;
                    q.push(l2);
                }
            }
        }
        return reachable;
    }

    bool dfs(int l) {
        for (int r : adj_[l]) {
            int l2 = match_r_[r];
            if (l2 < 0 || (dist_[l2] == dist_[l] + 1 && dfs(l2))) {
                match_l_[l] = r;
                match_r_[r] = l;
                return true;
            }
        }
        dist_[l] = kInf;
        return false;
    }

    int nl_, nr_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_l_, match_r_, dist_;
};

} // namespace compnum
