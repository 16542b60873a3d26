#include "plim/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "plim/error.hpp"

namespace plim {

PLMap iterate(const PLMap& m, std::size_t n, std::size_t budget) {
    if (n < 1) {
        throw Error(ErrorCode::precondition, "iterate needs n >= 1");
    }
    PLMap out = m;
    for (std::size_t k = 1; k < n; ++k) {
        out = compose(m, out);
        if (out.breakpoints().size() > budget) {
            throw Error(ErrorCode::budget_exceeded, "iterate " + std::to_string(k + 1) + " has " +
                                                        std::to_string(out.breakpoints().size()) +
                                                        " breakpoints, budget " + std::to_string(budget));
        }
    }
    return out;
}

std::vector<UnitRational> orbit(const PLMap& m, const UnitRational& x, std::size_t n) {
    std::vector<UnitRational> out;
    out.reserve(n + 1);
    out.push_back(x);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(m(out.back()));
    }
    return out;
}

namespace {

struct Expansion {
    std::vector<UnitRational> children;
    IntervalSet intervals;
};

Expansion expand(const PLMap& h, const UnitRational& x) {
    Expansion out;
    std::vector<Interval> proper;
    IntervalSet pre = preimage(h, IntervalSet::point(x));
    for (const auto& iv : pre.intervals()) {
        out.children.push_back(iv.lo);
        if (!iv.is_point()) {
            proper.push_back(iv);
        }
    }
    out.intervals = IntervalSet::from_intervals(std::move(proper));
    return out;
}

struct SubtreeResult {
    std::vector<Thread> threads;
    std::vector<IntervalBranch> records;
};

class Enumerator {
public:
    Enumerator(std::shared_ptr<const PLMap> h, std::size_t depth, std::size_t cap)
        : h_(std::move(h)), depth_(depth), cap_(cap) {}

    // Expands one node, recording interval-valued preimages.
    std::vector<UnitRational> children(const std::vector<UnitRational>& prefix,
                                       std::vector<IntervalBranch>& records) const {
        Expansion e = expand(*h_, prefix.back());
        if (!e.intervals.empty()) {
            records.push_back({prefix.size() + 1, prefix, std::move(e.intervals)});
        }
        return std::move(e.children);
    }

    SubtreeResult run(std::vector<UnitRational> prefix) const {
        SubtreeResult out;
        descend(prefix, out);
        return out;
    }

private:
    void descend(std::vector<UnitRational>& prefix, SubtreeResult& out) const {
        if (out.threads.size() >= cap_) {
            return;
        }
        if (prefix.size() == depth_) {
            out.threads.push_back(ThreadBuilder::trusted(h_, prefix));
            return;
        }
        for (auto& child : children(prefix, out.records)) {
            prefix.push_back(std::move(child));
            descend(prefix, out);
            prefix.pop_back();
            if (out.threads.size() >= cap_) {
                return;
            }
        }
    }

    std::shared_ptr<const PLMap> h_;
    std::size_t depth_;
    std::size_t cap_;
};

} // namespace

BranchTree backward_branches(const PLMap& h, const UnitRational& root, std::size_t depth, std::size_t max_branches,
                             unsigned workers) {
    if (depth < 1) {
        throw Error(ErrorCode::bad_depth, "depth must be >= 1");
    }
    if (max_branches < 1) {
        throw Error(ErrorCode::precondition, "max_branches must be >= 1");
    }
    workers = std::max(workers, 1U);
    auto bonding = std::make_shared<const PLMap>(h);
    // One extra thread per subtree tells us whether the cap was binding.
    std::size_t cap = max_branches == unlimited ? unlimited : max_branches + 1;
    Enumerator enumerator(bonding, depth, cap);

    std::vector<IntervalBranch> records;
    std::vector<std::vector<UnitRational>> frontier{{root}};
    if (workers > 1) {
        std::size_t wanted = static_cast<std::size_t>(workers) * 8;
        while (frontier.size() < wanted && frontier.front().size() < depth) {
            std::vector<std::vector<UnitRational>> next;
            for (const auto& prefix : frontier) {
                for (auto& child : enumerator.children(prefix, records)) {
                    auto extended = prefix;
                    extended.push_back(std::move(child));
                    next.push_back(std::move(extended));
                }
            }
            frontier = std::move(next);
            if (frontier.empty()) {
                break;
            }
        }
    }

    std::vector<SubtreeResult> results(frontier.size());
    std::atomic<std::size_t> next_job{0};
    auto work = [&] {
        for (std::size_t j = next_job++; j < frontier.size(); j = next_job++) {
            results[j] = enumerator.run(frontier[j]);
        }
    };
    if (workers == 1 || frontier.size() <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }

    BranchTree tree;
    tree.root = root;
    tree.depth = depth;
    for (auto& r : results) {
        for (auto& t : r.threads) {
            if (tree.branches.size() == cap) {
                break;
            }
            tree.branches.push_back(std::move(t));
        }
        records.insert(records.end(), std::make_move_iterator(r.records.begin()),
                       std::make_move_iterator(r.records.end()));
    }
    if (tree.branches.size() > max_branches) {
        tree.truncated = true;
        tree.branches.erase(tree.branches.begin() + static_cast<std::ptrdiff_t>(max_branches), tree.branches.end());
        // Keep only records the sequential traversal reaches before the
        // last kept thread.
        auto last = tree.branches.back().coords();
        std::erase_if(records, [&](const IntervalBranch& r) {
            return std::lexicographical_compare(last.begin(), last.begin() + r.prefix.size(), r.prefix.begin(),
                                                r.prefix.end());
        });
    }
    std::sort(records.begin(), records.end(), [](const IntervalBranch& a, const IntervalBranch& b) {
        return std::lexicographical_compare(a.prefix.begin(), a.prefix.end(), b.prefix.begin(), b.prefix.end());
    });
    tree.interval_branches = std::move(records);
    return tree;
}

} // namespace plim
