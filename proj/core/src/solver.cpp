#include "rapsolve/solver.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <queue>
#include <thread>
#include <unordered_set>
#include <vector>

namespace rapsolve {

namespace {

bool less_with_cost(const Config& a, Money cost_a, const Config& b, Money cost_b) {
    if (cost_a != cost_b) return cost_a < cost_b;
    return a < b;
}

struct ConfigHash {
    std::size_t operator()(const Config& x) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (Count v : x) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

struct Node {
    Config x;
    Money cost;
};

struct NodeGreater {
    bool operator()(const Node& a, const Node& b) const {
        return less_with_cost(b.x, b.cost, a.x, a.cost);
    }
};

struct Candidate {
    Config x;
    Money cost;
    bool reliable;
};

// O(1) feasibility of one reverse step from an LRP-feasible point: the
// subsystem surplus d never shrinks along reverse moves, so only the
// touched headroom/count entries and the budget need checking. Equivalent
// to lrp_feasible(apply_reverse(x, move)).
bool reverse_feasible(const NormalizedInstance& ninst, const Config& x, Money cost,
                      const TestMove& move) {
    if (cost + move.cost_delta > ninst.c0) return false;
    const auto fq = static_cast<std::size_t>(move.fq);
    if (x[fq] + 1 > ninst.upper[fq]) return false;
    if (move.kind == TestMove::Kind::swap_down && x[static_cast<std::size_t>(move.fp)] < 1) {
        return false;
    }
    return true;
}

class WalkSearch {
public:
    WalkSearch(const NormalizedInstance& ninst, std::span<const TestMove> moves,
               const Config& y0, double r0, const WalkOptions& options)
        : ninst_(ninst), moves_(moves), r0_(r0), options_(options) {
        best_ = y0;
        best_cost_ = total_cost(ninst, y0);
    }

    SolveReport run() {
        const auto started = std::chrono::steady_clock::now();
        SolveReport report;

        Config beta = lrp_optimum(ninst_);
        const Money beta_cost = total_cost(ninst_, beta);
        if (is_reliable(ninst_, beta, r0_)) {
            best_ = std::move(beta);
            best_cost_ = beta_cost;
        } else {
            visited_.insert(beta);
            push({std::move(beta), beta_cost});
            if (options_.threads > 1) {
                run_parallel();
            } else {
                run_serial();
            }
        }

        const Money shift_constant = original_cost_shift();
        report.optimum = denormalize(ninst_, best_);
        report.opt_cost = best_cost_ + shift_constant;
        report.opt_reliability = system_reliability(ninst_, best_);
        report.greedy_cost = ninst_.c0 + shift_constant;
        report.nodes_generated = generated_;
        report.nodes_expanded = expanded_;
        report.nodes_pruned_bound = pruned_bound_;
        report.nodes_pruned_duplicate = pruned_duplicate_;
        report.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return report;
    }

private:
    Money original_cost_shift() const {
        Money sum = 0;
        for (std::size_t f = 0; f < ninst_.perm.size(); ++f) {
            sum += ninst_.cost[f] * ninst_.shift[static_cast<std::size_t>(ninst_.perm[f])];
        }
        return sum;
    }

    bool use_heap() const { return options_.strategy == Strategy::bestfirst; }

    void push(Node node) {
        if (use_heap()) {
            heap_.push(std::move(node));
        } else {
            fifo_.push_back(std::move(node));
        }
    }

    bool frontier_empty() const { return use_heap() ? heap_.empty() : fifo_.empty(); }

    Node pop() {
        if (use_heap()) {
            Node node = heap_.top();
            heap_.pop();
            return node;
        }
        Node node = std::move(fifo_.front());
        fifo_.pop_front();
        return node;
    }

    std::vector<Candidate> expand(const Node& node) const {
        std::vector<Candidate> out;
        out.reserve(moves_.size());
        Config w = node.x;
        for (const TestMove& move : moves_) {
            if (!reverse_feasible(ninst_, node.x, node.cost, move)) continue;
            apply_reverse_inplace(w, move);
            const Money w_cost = node.cost + move.cost_delta;
            if (!less_with_cost(node.x, node.cost, w, w_cost)) {
                throw InternalError("frontier insertion does not increase the search order");
            }
            out.push_back({w, w_cost, is_reliable(ninst_, w, r0_)});
            undo_reverse_inplace(w, move);
        }
        return out;
    }

    // Shared by the serial and parallel drivers; caller holds the lock in
    // parallel mode. Returns true when the early-stop request fires.
    bool commit(Candidate&& cand) {
        if (++generated_ == 0) throw InternalError("node counter overflow");
        if (cand.reliable) {
            if (less_with_cost(cand.x, cand.cost, best_, best_cost_)) {
                best_ = std::move(cand.x);
                best_cost_ = cand.cost;
                if (options_.early_stop) return true;
            }
            return false;
        }
        if (less_with_cost(best_, best_cost_, cand.x, cand.cost)) {
            ++pruned_bound_;
            return false;
        }
        if (!visited_.insert(cand.x).second) {
            ++pruned_duplicate_;
            return false;
        }
        push({std::move(cand.x), cand.cost});
        return false;
    }

    void run_serial() {
        while (!frontier_empty()) {
            Node node = pop();
            if (use_heap() && !less_with_cost(node.x, node.cost, best_, best_cost_)) {
                break;  // nothing left in the frontier can beat the incumbent
            }
            ++expanded_;
            bool stop = false;
            for (Candidate& cand : expand(node)) {
                if (commit(std::move(cand))) {
                    stop = true;
                    break;
                }
            }
            if (stop) break;
        }
    }

    void run_parallel() {
        const int workers = std::min(options_.threads, 256);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([this] { worker_loop(); });
        }
        for (std::thread& t : pool) t.join();
        if (failure_) std::rethrow_exception(failure_);
    }

    void worker_loop() {
        std::unique_lock lock(mutex_);
        while (true) {
            cv_.wait(lock, [&] { return stop_ || in_flight_ == 0 || !frontier_empty(); });
            if (stop_ || (frontier_empty() && in_flight_ == 0)) return;
            if (frontier_empty()) continue;
            Node node = pop();
            // A node the incumbent already beats only breeds pruned
            // children; dropping it here is equivalent and cheaper.
            if (use_heap() && !less_with_cost(node.x, node.cost, best_, best_cost_)) {
                continue;
            }
            ++in_flight_;
            lock.unlock();

            std::vector<Candidate> candidates;
            std::exception_ptr error;
            try {
                candidates = expand(node);
            } catch (...) {
                error = std::current_exception();
            }

            lock.lock();
            if (error) {
                failure_ = error;
                stop_ = true;
            } else {
                ++expanded_;
                for (Candidate& cand : candidates) {
                    if (commit(std::move(cand))) {
                        stop_ = true;
                        break;
                    }
                }
            }
            --in_flight_;
            cv_.notify_all();
        }
    }

    const NormalizedInstance& ninst_;
    std::span<const TestMove> moves_;
    double r0_;
    WalkOptions options_;

    std::deque<Node> fifo_;
    std::priority_queue<Node, std::vector<Node>, NodeGreater> heap_;
    std::unordered_set<Config, ConfigHash> visited_;
    Config best_;
    Money best_cost_ = 0;
    std::uint64_t generated_ = 0;
    std::uint64_t expanded_ = 0;
    std::uint64_t pruned_bound_ = 0;
    std::uint64_t pruned_duplicate_ = 0;

    std::mutex mutex_;
    std::condition_variable cv_;
    int in_flight_ = 0;
    bool stop_ = false;
    std::exception_ptr failure_;
};

}  // namespace

bool less_c(const Config& a, const Config& b, std::span<const Money> cost) {
    if (a.size() != b.size() || a.size() != cost.size()) {
        throw ValidationError("configuration shapes do not match the cost vector");
    }
    Money cost_a = 0;
    Money cost_b = 0;
    for (std::size_t f = 0; f < cost.size(); ++f) {
        cost_a += cost[f] * a[f];
        cost_b += cost[f] * b[f];
    }
    return less_with_cost(a, cost_a, b, cost_b);
}

Config lrp_optimum(const NormalizedInstance& ninst) {
    if (!ninst.has_budget()) throw ValidationError("instance has no budget c0 set");
    const Layout& lay = ninst.layout;
    Config beta(static_cast<std::size_t>(lay.total()), 0);
    Money spent = 0;
    for (int i = 0; i < lay.subsystems(); ++i) {
        if (ninst.min_units[static_cast<std::size_t>(i)] == 0) continue;
        int pick = -1;
        Money pick_cost = 0;
        for (int j = lay.types(i) - 1; j >= 0; --j) {
            const int f = lay.flat(i, j);
            if (ninst.upper[static_cast<std::size_t>(f)] < 1) continue;
            if (pick < 0 || ninst.cost[static_cast<std::size_t>(f)] < pick_cost) {
                pick = f;
                pick_cost = ninst.cost[static_cast<std::size_t>(f)];
            }
        }
        if (pick < 0) {
            throw EmptySubsystemError("subsystem " + std::to_string(i) +
                                      " has zero total upper bound");
        }
        beta[static_cast<std::size_t>(pick)] = 1;
        spent += pick_cost;
    }
    if (spent > ninst.c0) {
        throw BudgetError("budget " + std::to_string(ninst.c0) +
                          " is below the cheapest admissible configuration (" +
                          std::to_string(spent) + ")");
    }
    return beta;
}

SolveReport walk_back(const NormalizedInstance& ninst, std::span<const TestMove> moves,
                      const Config& y0, double r0, const WalkOptions& options) {
    if (!ninst.has_budget()) throw ValidationError("instance has no budget c0 set");
    if (!lrp_feasible(ninst, y0)) {
        throw ValidationError("starting point is not LRP-feasible under the recorded budget");
    }
    if (!is_reliable(ninst, y0, r0)) {
        throw ValidationError("starting point is not reliable");
    }
    WalkSearch search(ninst, moves, y0, r0, options);
    return search.run();
}

}  // namespace rapsolve
