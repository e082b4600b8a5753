#include <mlc/parallel.hh>
#include <mlc/colour.hh>
#include <mlc/errors.hh>

#include "expand.hh"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <memory>
#include <thread>

using std::atomic;
using std::condition_variable;
using std::deque;
using std::make_shared;
using std::mutex;
using std::nullopt;
using std::optional;
using std::shared_ptr;
using std::span;
using std::unique_lock;
using std::vector;

using std::chrono::duration;
using std::chrono::steady_clock;

using namespace mlc;

mlc::SharedIncumbent::SharedIncumbent(Incumbent initial) :
    _key(incumbent_key(initial.size(), initial.cost())),
    _witness(std::move(initial))
{
}

auto mlc::SharedIncumbent::try_improve(span<const Vertex> clique, LabelSet labels) -> bool
{
    auto candidate = incumbent_key(int(clique.size()), labels.cost());
    if (candidate <= _key.load(std::memory_order_acquire))
        return false;

    std::lock_guard guard{ _mutex };
    if (candidate <= _key.load(std::memory_order_relaxed))
        return false;

    _witness.clique.assign(clique.begin(), clique.end());
    _witness.labels = labels;
    _key.store(candidate, std::memory_order_release);
    return true;
}

auto mlc::SharedIncumbent::snapshot() const -> Incumbent
{
    std::lock_guard guard{ _mutex };
    return _witness;
}

auto mlc::split_root(const LabelledGraph & permuted) -> deque<Subproblem>
{
    deque<Subproblem> result;
    int n = permuted.size();
    if (0 == n)
        return result;

    Bitset everything{n};
    everything.set_all();
    auto [order, bounds] = colour_order(permuted.graph(), everything);

    // the branch at index i sees exactly order[0 .. i] as candidates
    Bitset remaining = everything;
    for (int i = n - 1 ; i >= 0 ; --i) {
        Vertex v = order[i];
        Subproblem s;
        s.prefix = { v };
        s.candidates = remaining;
        s.candidates.intersect_with(permuted.graph().neighbours(v));
        s.colour_bound = bounds[i];
        s.position = { n - 1 - i };
        result.push_back(std::move(s));
        remaining.reset(v);
    }

    return result;
}

mlc::SharedBranch::SharedBranch(const LabelledGraph & permuted, Subproblem parent) :
    _graph(permuted),
    _parent(std::move(parent))
{
    colour_order(_graph.graph(), _parent.candidates, _order, _bounds);
    _next.store(int(_order.size()) - 1);
}

auto mlc::SharedBranch::make_child(int i) const -> Subproblem
{
    Vertex w = _order[i];

    Subproblem s;
    s.prefix = _parent.prefix;
    s.prefix.push_back(w);
    s.labels = labels_with_clique(_graph, w, _parent.prefix, _parent.labels);

    s.candidates = Bitset{_graph.size()};
    for (int j = 0 ; j < i ; ++j)
        s.candidates.set(_order[j]);
    s.candidates.intersect_with(_graph.graph().neighbours(w));

    s.colour_bound = _bounds[i];
    s.position = _parent.position;
    s.position.push_back(width() - 1 - i);
    return s;
}

auto mlc::SharedBranch::remaining() const -> int
{
    return std::max(0, _next.load() + 1);
}

auto mlc::SharedBranch::claim() -> optional<Subproblem>
{
    int i = _next.fetch_sub(1);
    if (i < 0)
        return nullopt;
    return make_child(i);
}

auto mlc::SharedBranch::abandon() -> void
{
    _next.store(-1);
}

auto mlc::SharedBranch::steal() -> vector<Subproblem>
{
    vector<Subproblem> result;
    for (int i = _next.exchange(-1) ; i >= 0 ; --i)
        result.push_back(make_child(i));
    return result;
}

namespace
{
    struct SharedPolicy
    {
        SharedIncumbent & shared;

        auto size() const -> int
        {
            return shared.size();
        }

        auto cost() const -> int
        {
            return shared.cost();
        }

        auto offer(span<const Vertex> clique, LabelSet labels) -> void
        {
            shared.try_improve(clique, labels);
        }
    };

    /**
     * Depth-1 subproblems in sequential order, plus the depth-1 branches
     * currently being worked on. When the queue runs dry, an idle worker
     * resplits the latest in-flight branch into depth-2 subproblems.
     */
    class WorkPool
    {
        private:
            mutex _mutex;
            condition_variable _cv;
            deque<Subproblem> _queue;
            vector<shared_ptr<SharedBranch>> _in_flight;
            int _pending = 0;   // depth-1 subproblems handed out but not yet published or settled

        public:
            explicit WorkPool(deque<Subproblem> queue) :
                _queue(std::move(queue))
            {
            }

            auto next() -> optional<Subproblem>
            {
                unique_lock lock{ _mutex };
                while (true) {
                    if (! _queue.empty()) {
                        auto result = std::move(_queue.front());
                        _queue.pop_front();
                        if (result.depth() == 1)
                            ++_pending;
                        return result;
                    }

                    shared_ptr<SharedBranch> victim;
                    for (auto & b : _in_flight)
                        if (b->remaining() > 0 && (! victim || b->position() > victim->position()))
                            victim = b;

                    if (victim) {
                        for (auto & s : victim->steal())
                            _queue.push_back(std::move(s));
                        if (_queue.size() > 1)
                            _cv.notify_all();
                        continue;
                    }

                    if (_pending > 0) {
                        _cv.wait(lock);
                        continue;
                    }

                    return nullopt;
                }
            }

            auto publish(shared_ptr<SharedBranch> branch) -> void
            {
                {
                    std::lock_guard guard{ _mutex };
                    _in_flight.push_back(std::move(branch));
                    --_pending;
                }
                _cv.notify_all();
            }

            auto settle() -> void
            {
                {
                    std::lock_guard guard{ _mutex };
                    --_pending;
                }
                _cv.notify_all();
            }

            auto retire(const shared_ptr<SharedBranch> & branch) -> void
            {
                std::lock_guard guard{ _mutex };
                std::erase(_in_flight, branch);
            }
    };

    enum class Entry
    {
        pruned,
        filtered,
        entered
    };

    class Worker
    {
        private:
            const LabelledGraph & _graph;
            SharedIncumbent & _incumbent;
            WorkPool & _pool;
            const SearchHooks * _hooks;
            int _budget;
            bool _first;
            bool _bound_pruning;
            SharedPolicy _policy;
            detail::Expander<SharedPolicy> _expander;
            std::uint64_t _nodes = 0;

            auto enter(const Subproblem & s) -> Entry
            {
                if (_bound_pruning && should_prune(_first, s.depth() - 1, s.colour_bound, _incumbent.size()))
                    return Entry::pruned;

                if (_hooks && _hooks->on_prefix)
                    _hooks->on_prefix(_first, s.prefix);

                if (s.labels.cost() > label_limit(_first, _budget, _incumbent.cost()))
                    return Entry::filtered;

                _incumbent.try_improve(s.prefix, s.labels);
                return Entry::entered;
            }

            auto execute_deep(const Subproblem & s) -> Entry
            {
                auto entry = enter(s);
                if (entry == Entry::entered && s.candidates.any())
                    _expander.run(s.prefix, s.candidates, s.labels);
                return entry;
            }

            auto execute_top(Subproblem s) -> void
            {
                auto entry = enter(s);
                if (entry != Entry::entered || s.candidates.empty()) {
                    _pool.settle();
                    return;
                }

                // colouring the branch is this subproblem's expand call
                ++_nodes;
                auto branch = make_shared<SharedBranch>(_graph, std::move(s));
                _pool.publish(branch);

                while (auto child = branch->claim())
                    if (execute_deep(*child) == Entry::pruned) {
                        branch->abandon();
                        break;
                    }

                _pool.retire(branch);
            }

        public:
            Worker(const LabelledGraph & graph, SharedIncumbent & incumbent, WorkPool & pool, int budget, bool first,
                    const SearchHooks * hooks) :
                _graph(graph),
                _incumbent(incumbent),
                _pool(pool),
                _hooks(hooks),
                _budget(budget),
                _first(first),
                _bound_pruning(hooks ? hooks->bound_pruning : true),
                _policy{ incumbent },
                _expander(graph, _policy, budget, first, hooks)
            {
            }

            auto run() -> void
            {
                while (auto s = _pool.next()) {
                    if (s->depth() == 1)
                        execute_top(std::move(*s));
                    else
                        execute_deep(*s);
                }
            }

            auto nodes() const -> std::uint64_t
            {
                return _nodes + _expander.nodes;
            }
    };

    auto run_parallel_pass(const LabelledGraph & permuted, int budget, bool first, int workers,
            SharedIncumbent & incumbent, const SearchHooks * hooks) -> std::uint64_t
    {
        if (0 == permuted.size())
            return 0;

        WorkPool pool{ split_root(permuted) };
        atomic<std::uint64_t> nodes{ 1 };
        std::exception_ptr failure;
        mutex failure_mutex;

        {
            vector<std::jthread> threads;
            threads.reserve(workers);
            for (int t = 0 ; t < workers ; ++t)
                threads.emplace_back([&] {
                    try {
                        Worker worker{ permuted, incumbent, pool, budget, first, hooks };
                        worker.run();
                        nodes += worker.nodes();
                    }
                    catch (...) {
                        std::lock_guard guard{ failure_mutex };
                        if (! failure)
                            failure = std::current_exception();
                    }
                });
        }

        if (failure)
            std::rethrow_exception(failure);

        return nodes.load();
    }
}

auto mlc::solve_parallel(const LabelledGraph & graph, int budget, int workers, const SearchHooks * hooks) -> Solution
{
    if (budget < 1)
        throw ArgumentError{"budget must be at least 1, got " + std::to_string(budget)};
    if (workers < 1)
        throw ArgumentError{"worker count must be at least 1, got " + std::to_string(workers)};

    auto start = steady_clock::now();

    auto [permuted, permutation] = permute_by_degree(graph);

    Solution result;
    result.stats.workers = workers;

    SharedIncumbent incumbent;
    result.stats.nodes_pass1 = run_parallel_pass(permuted, budget, true, workers, incumbent, hooks);

    if (second_pass_is_redundant(incumbent.snapshot()))
        result.stats.second_pass_skipped = true;
    else
        result.stats.nodes_pass2 = run_parallel_pass(permuted, budget, false, workers, incumbent, hooks);

    auto best = incumbent.snapshot();
    for (auto v : best.clique)
        result.clique.push_back(permutation.forward[v]);
    std::sort(result.clique.begin(), result.clique.end());
    result.labels = best.labels;

    result.stats.elapsed = duration<double>(steady_clock::now() - start).count();
    return result;
}
