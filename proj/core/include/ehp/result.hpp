#ifndef EHP_RESULT_HPP
#define EHP_RESULT_HPP

#include <optional>
#include <utility>

namespace ehp {

/// Outcome classification for bound-state solves.  These are ordinary values
/// rather than exceptions so spectrum enumeration can stop cleanly at the
/// last bound level.
enum class SolveStatus {
    Ok,
    NoBoundState,         // quantization condition has no real solution
    NotBelowThreshold,    // formal solution exists but energy is not negative
    SupercriticalBarrier, // nu complex: 1 + 4(gamma + beta1) < 0
    NotBoundRegime,       // xi3 < 0: no normalizable x^lambda behaviour
};

const char* to_string(SolveStatus s);

template <typename T>
class Result {
  public:
    static Result success(T value) {
        Result r;
        r.status_ = SolveStatus::Ok;
        r.value_ = std::move(value);
        return r;
    }
    static Result failure(SolveStatus status) {
        Result r;
        r.status_ = status;
        return r;
    }

    bool ok() const { return status_ == SolveStatus::Ok; }
    SolveStatus status() const { return status_; }
    const T& operator*() const { return *value_; }
    const T* operator->() const { return &*value_; }
    const T& value() const { return value_.value(); }

  private:
    SolveStatus status_ = SolveStatus::Ok;
    std::optional<T> value_;
};

} // namespace ehp

#endif
