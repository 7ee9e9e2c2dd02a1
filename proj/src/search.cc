#include <gvm/errors.hh>
#include <gvm/search.hh>

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

using std::int64_t;
using std::optional;
using std::uint64_t;
using std::vector;

namespace gvm {

namespace {
    // Finite group with elements encoded by their canonical index (mixed radix,
    // first factor most significant), so index order is canonical order.
    class FiniteArith {
    public:
        using Value = int;

        explicit FiniteArith(const GroupSpec & spec) :
            _spec(spec)
        {
            if (! spec.is_finite())
                throw UnsupportedError("brute force needs a finite group, got " + format_spec(spec));
            auto order = *spec.order();
            if (order > (int64_t{1} << 30))
                throw UnsupportedError("group " + format_spec(spec) + " is too large to search");
            _size = static_cast<int>(order);

            _digits.resize(static_cast<std::size_t>(_size) * spec.rank());
            for (int x = 0; x < _size; ++x) {
                int rest = x;
                for (std::size_t i = spec.rank(); i-- > 0;) {
                    auto m = static_cast<int>(spec.moduli()[i]);
                    _digits[x * spec.rank() + i] = rest % m;
                    rest /= m;
                }
            }
            _neg.resize(_size);
            for (int x = 0; x < _size; ++x)
                _neg[x] = combine(0, x, -1);
            if (_size <= 1024) {
                _table.resize(static_cast<std::size_t>(_size) * _size);
                for (int x = 0; x < _size; ++x)
                    for (int y = 0; y < _size; ++y)
                        _table[x * _size + y] = combine(x, y, 1);
            }
        }

        auto zero() const -> Value { return 0; }
        auto add(Value x, Value y) const -> Value
        {
            return _table.empty() ? combine(x, y, 1) : _table[x * _size + y];
        }
        auto sub(Value x, Value y) const -> Value { return add(x, _neg[y]); }
        auto valid(Value x, bool allow_zero) const -> bool { return x != 0 || allow_zero; }

        auto candidates(bool allow_zero) const -> vector<Value>
        {
            vector<Value> c;
            for (int x = allow_zero ? 0 : 1; x < _size; ++x)
                c.push_back(x);
            return c;
        }

        auto to_element(Value x) const -> GroupElement
        {
            GroupElement e{vector<int64_t>(_spec.rank())};
            for (std::size_t i = 0; i < _spec.rank(); ++i)
                e.components[i] = _digits[x * _spec.rank() + i];
            return e;
        }

        auto spec() const -> const GroupSpec & { return _spec; }

    private:
        // x + sign * y, componentwise
        auto combine(int x, int y, int sign) const -> int
        {
            int result = 0;
            for (std::size_t i = 0; i < _spec.rank(); ++i) {
                auto m = static_cast<int>(_spec.moduli()[i]);
                int d = (_digits[x * _spec.rank() + i] + sign * _digits[y * _spec.rank() + i]) % m;
                if (d < 0)
                    d += m;
                result = result * m + d;
            }
            return result;
        }

        GroupSpec _spec;
        int _size = 0;
        vector<int> _digits, _neg, _table;
    };

    class IntArith {
    public:
        using Value = int64_t;

        explicit IntArith(int64_t bound) :
            _spec(vector<int64_t>{infinite_modulus}),
            _bound(bound)
        {
            if (bound < 1)
                throw DomainError("integer search bound must be at least 1");
        }

        auto zero() const -> Value { return 0; }
        auto add(Value x, Value y) const -> Value { return x + y; }
        auto sub(Value x, Value y) const -> Value { return x - y; }
        auto valid(Value x, bool allow_zero) const -> bool
        {
            return (x != 0 || allow_zero) && x >= -_bound && x <= _bound;
        }

        auto candidates(bool allow_zero) const -> vector<Value>
        {
            vector<Value> c;
            if (allow_zero)
                c.push_back(0);
            for (int64_t k = 1; k <= _bound; ++k) {
                c.push_back(k);
                c.push_back(-k);
            }
            return c;
        }

        auto to_element(Value x) const -> GroupElement { return GroupElement{{x}}; }
        auto spec() const -> const GroupSpec & { return _spec; }

    private:
        GroupSpec _spec;
        int64_t _bound;
    };

    enum class Status {
        found,
        exhausted,
        capped,
        aborted
    };

    template <typename Arith>
    struct SubtreeResult {
        Status status = Status::aborted;
        uint64_t nodes = 0;
        vector<typename Arith::Value> labels;
    };

    // Depth-first search over vertices in index order. A vertex is "completed"
    // by its highest-numbered neighbour; at that point its weight is final and
    // must equal mu, which the first completed vertex fixes. When a vertex
    // completes some earlier vertex and mu is known, its label is forced, so
    // only that value is tried: this skips exactly the candidates the weight
    // check would reject and preserves canonical-first order.
    template <typename Arith>
    class Engine {
    public:
        using Value = typename Arith::Value;

        Engine(const Graph & g, const Arith & arith, vector<char> allow_zero) :
            _g(g),
            _arith(arith),
            _allow_zero(std::move(allow_zero)),
            _completes(g.order())
        {
            for (Vertex u = 0; u < g.order(); ++u) {
                if (g.degree(u) == 0)
                    _mu_starts_zero = true;
                else
                    _completes[g.neighbours(u).back()].push_back(u);
            }
        }

        auto order() const -> int { return _g.order(); }

        auto root_candidates() const -> vector<Value>
        {
            if (_g.order() == 0)
                return {};
            State s = initial_state(0);
            return s.candidates_for(*this, 0);
        }

        auto run_subtree(Value first, uint64_t cap, const std::atomic<int> * best, int index) const
            -> SubtreeResult<Arith>
        {
            State s = initial_state(cap);
            s.best = best;
            s.index = index;
            SubtreeResult<Arith> result;
            auto status = s.try_value(*this, 0, first);
            result.status = status == Step::found ? Status::found
                : status == Step::capped          ? Status::capped
                : status == Step::aborted         ? Status::aborted
                                                  : Status::exhausted;
            result.nodes = s.nodes;
            if (result.status == Status::found)
                result.labels = std::move(s.labels);
            return result;
        }

        auto arith() const -> const Arith & { return _arith; }

    private:
        enum class Step {
            found,
            failed,
            capped,
            aborted
        };

        struct State {
            vector<Value> labels, partial;
            optional<Value> mu;
            uint64_t nodes = 0, cap = 0;
            const std::atomic<int> * best = nullptr;
            int index = 0;

            auto candidates_for(const Engine & e, Vertex v) const -> vector<Value>
            {
                auto & done = e._completes[v];
                if (mu && ! done.empty()) {
                    auto forced = e._arith.sub(*mu, partial[done.front()]);
                    if (e._arith.valid(forced, e._allow_zero[v]))
                        return {forced};
                    return {};
                }
                return e._arith.candidates(e._allow_zero[v]);
            }

            auto try_value(const Engine & e, Vertex v, Value x) -> Step
            {
                if (++nodes > cap)
                    return Step::capped;
                if (best && (nodes & 0xfff) == 0 && best->load(std::memory_order_relaxed) < index)
                    return Step::aborted;

                labels[v] = x;
                for (auto u : e._g.neighbours(v))
                    partial[u] = e._arith.add(partial[u], x);

                bool set_mu = false, ok = true;
                for (auto u : e._completes[v]) {
                    if (! mu) {
                        mu = partial[u];
                        set_mu = true;
                    }
                    else if (partial[u] != *mu) {
                        ok = false;
                        break;
                    }
                }

                Step step = Step::failed;
                if (ok)
                    step = descend(e, v + 1);

                if (step != Step::found) {
                    for (auto u : e._g.neighbours(v))
                        partial[u] = e._arith.sub(partial[u], x);
                    if (set_mu)
                        mu.reset();
                }
                return step;
            }

            auto descend(const Engine & e, Vertex v) -> Step
            {
                if (v == e._g.order())
                    return Step::found;
                for (auto x : candidates_for(e, v)) {
                    auto step = try_value(e, v, x);
                    if (step != Step::failed)
                        return step;
                }
                return Step::failed;
            }
        };

        auto initial_state(uint64_t cap) const -> State
        {
            State s;
            s.labels.assign(_g.order(), _arith.zero());
            s.partial.assign(_g.order(), _arith.zero());
            if (_mu_starts_zero)
                s.mu = _arith.zero();
            s.cap = cap;
            return s;
        }

        const Graph & _g;
        Arith _arith;
        vector<char> _allow_zero;
        vector<vector<Vertex>> _completes;
        bool _mu_starts_zero = false;
    };

    template <typename Arith>
    struct Outcome {
        bool found = false;
        uint64_t nodes = 0;
        vector<typename Arith::Value> labels;
    };

    auto describe_cap(uint64_t cap) -> std::string
    {
        return "search cap of " + std::to_string(cap) + " candidate labelings exceeded";
    }

    // Subtrees are the candidates for vertex 0, in canonical order. The
    // answer is the first subtree that finds a labeling, with node counts
    // accumulated over the subtrees before it, so the result and the cap
    // verdict are the same for any number of workers.
    template <typename Arith>
    auto run_search(const Engine<Arith> & engine, const SearchOptions & options) -> Outcome<Arith>
    {
        Outcome<Arith> outcome;
        if (engine.order() == 0) {
            outcome.found = true;
            return outcome;
        }

        auto roots = engine.root_candidates();
        auto cap = options.cap;
        int workers = std::min<int>(std::max(options.jobs, 1), static_cast<int>(roots.size()));

        if (workers <= 1) {
            for (std::size_t j = 0; j < roots.size(); ++j) {
                auto r = engine.run_subtree(roots[j], cap - outcome.nodes, nullptr, static_cast<int>(j));
                if (r.status == Status::capped)
                    throw ResourceError(describe_cap(cap));
                outcome.nodes += r.nodes;
                if (r.status == Status::found) {
                    outcome.found = true;
                    outcome.labels = std::move(r.labels);
                    return outcome;
                }
            }
            return outcome;
        }

        vector<SubtreeResult<Arith>> results(roots.size());
        std::atomic<int> next{0}, best{INT_MAX};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            try {
                while (true) {
                    int j = next.fetch_add(1);
                    if (j >= static_cast<int>(roots.size()))
                        return;
                    if (best.load() < j)
                        continue;
                    results[j] = engine.run_subtree(roots[j], cap, &best, j);
                    if (results[j].status == Status::found) {
                        int seen = best.load();
                        while (j < seen && ! best.compare_exchange_weak(seen, j)) {
                        }
                    }
                }
            }
            catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure = std::current_exception();
            }
        };
        vector<std::thread> threads;
        for (int t = 0; t < workers; ++t)
            threads.emplace_back(work);
        for (auto & t : threads)
            t.join();
        if (failure)
            std::rethrow_exception(failure);

        for (auto & r : results) {
            if (r.status == Status::capped || r.status == Status::aborted || r.nodes > cap - outcome.nodes) {
                if (r.status == Status::aborted)
                    throw std::logic_error("search subtree aborted before any earlier subtree succeeded");
                throw ResourceError(describe_cap(cap));
            }
            outcome.nodes += r.nodes;
            if (r.status == Status::found) {
                outcome.found = true;
                outcome.labels = std::move(r.labels);
                return outcome;
            }
        }
        return outcome;
    }

    template <typename Arith>
    auto to_labeling(const Arith & arith, const vector<typename Arith::Value> & labels) -> Labeling
    {
        Labeling l{arith.spec(), {}};
        for (auto x : labels)
            l.values.push_back(arith.to_element(x));
        return l;
    }

    template <typename Cert, typename Verdict>
    auto expect_certificate(Verdict && verdict) -> Cert
    {
        if (auto cert = std::get_if<Cert>(&verdict))
            return std::move(*cert);
        throw std::logic_error("search produced a labeling that fails verification: "
            + std::get<Refutation>(verdict).describe());
    }
}

auto brute_force_magic(const Graph & g, const GroupSpec & spec, const SearchOptions & options) -> MagicSearchResult
{
    FiniteArith arith{spec};
    Engine<FiniteArith> engine{g, arith, vector<char>(g.order(), 0)};
    auto outcome = run_search(engine, options);
    if (! outcome.found)
        return Exhausted{outcome.nodes};
    return expect_certificate<MagicCertificate>(verify_magic(g, to_labeling(arith, outcome.labels)));
}

auto brute_force_a_prime(const ReducedGraph & r, const GroupSpec & spec, const SearchOptions & options)
    -> QuotientSearchResult
{
    FiniteArith arith{spec};
    vector<char> allow_zero;
    for (int c = 0; c < r.class_count(); ++c)
        allow_zero.push_back(r.class_size(c) >= 2);
    Engine<FiniteArith> engine{r.quotient, arith, std::move(allow_zero)};
    auto outcome = run_search(engine, options);
    if (! outcome.found)
        return Exhausted{outcome.nodes};
    return expect_certificate<QuotientCertificate>(verify_a_prime(r, to_labeling(arith, outcome.labels)));
}

auto brute_force_int(const Graph & g, int64_t bound, const SearchOptions & options) -> IntSearchResult
{
    IntArith arith{bound};
    Engine<IntArith> engine{g, arith, vector<char>(g.order(), 0)};
    auto outcome = run_search(engine, options);
    if (! outcome.found)
        return BoundedExhausted{bound, outcome.nodes};
    return expect_certificate<MagicCertificate>(verify_magic(g, to_labeling(arith, outcome.labels)));
}

}
