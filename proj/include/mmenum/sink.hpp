#pragma once

#include <chrono>
#include <concepts>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>

#include "mmenum/matching.hpp"

namespace mmenum {

/// Anything callable with a matching. A sink returning bool stops the
/// enumeration by returning false; any other return type is ignored.
template <class F>
concept MatchingSink = std::invocable<F&, const Matching&>;

namespace detail {

template <MatchingSink F>
bool emit(F& sink, const Matching& m) {
    if constexpr (std::convertible_to<std::invoke_result_t<F&, const Matching&>, bool>) {
        return static_cast<bool>(sink(m));
    } else {
        sink(m);
        return true;
    }
}

}  // namespace detail

/// Counters reported by every enumerator. Fields that do not apply to an
/// algorithm stay zero.
struct TraversalStats {
    std::size_t emitted = 0;
    bool stopped = false;  // sink asked to stop

    // supergraph / k-best
    std::size_t store_size = 0;
    std::size_t store_nodes = 0;
    std::size_t peak_queue = 0;

    // reverse search
    std::size_t max_depth = 0;       // most tree nodes on the DFS stack at once
    std::size_t max_batch = 0;       // most children of a single node
    std::size_t peak_retained = 0;   // most matchings held by the traversal at once
    std::size_t candidates = 0;      // (e, F) pairs examined

    // binary partition
    std::size_t branch_checks = 0;
    std::size_t max_checks_per_node = 0;
};

/// Inter-output timing of a run. Gaps exist only once two outputs exist.
struct DelayStats {
    std::size_t count = 0;
    std::optional<double> first_ms;
    std::optional<double> max_gap_ms;
    std::optional<double> mean_gap_ms;
};

class DelayRecorder {
public:
    using clock = std::chrono::steady_clock;

    DelayRecorder() : start_(clock::now()), last_(start_) {}

    void restart() {
        *this = DelayRecorder{};
    }

    void tick() {
        auto now = clock::now();
        if (count_ == 0) {
            first_ = now - start_;
        } else {
            auto gap = now - last_;
            max_gap_ = std::max(max_gap_, gap);
            total_gap_ += gap;
        }
        last_ = now;
        ++count_;
    }

    DelayStats stats() const {
        using ms = std::chrono::duration<double, std::milli>;
        DelayStats s;
        s.count = count_;
        if (count_ >= 1) {
            s.first_ms = ms(first_).count();
        }
        if (count_ >= 2) {
            s.max_gap_ms = ms(max_gap_).count();
            s.mean_gap_ms = ms(total_gap_).count() / static_cast<double>(count_ - 1);
        }
        return s;
    }

private:
    clock::time_point start_;
    clock::time_point last_;
    clock::duration first_{};
    clock::duration max_gap_{};
    clock::duration total_gap_{};
    std::size_t count_ = 0;
};

/// "count=<c> first_ms=<f> max_gap_ms=<g> mean_gap_ms=<m>", three decimals,
/// "na" for undefined values.
inline std::string format_delay_stats(const DelayStats& s) {
    auto fmt = [](const std::optional<double>& v) {
        if (!v) {
            return std::string("na");
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", *v);
        return std::string(buf);
    };
    return "count=" + std::to_string(s.count) + " first_ms=" + fmt(s.first_ms) + " max_gap_ms=" + fmt(s.max_gap_ms) +
           " mean_gap_ms=" + fmt(s.mean_gap_ms);
}

/// Type-erased sink that times every emission before forwarding it.
class EnumerationSink {
public:
    explicit EnumerationSink(std::function<void(const Matching&)> callback) : callback_(std::move(callback)) {}

    void operator()(const Matching& m) {
        recorder_.tick();
        callback_(m);
    }

    DelayStats stats() const { return recorder_.stats(); }
    void restart_clock() { recorder_.restart(); }

private:
    std::function<void(const Matching&)> callback_;
    DelayRecorder recorder_;
};

}  // namespace mmenum
