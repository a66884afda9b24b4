#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace fishburn {

// Guard against runaway exhaustive enumeration. Every enumerating operation
// takes a Cap and refuses to do more than `limit` units of work (streamed
// items for output-sensitive enumerations, candidate count for filters over a
// closed-form universe). The default admits every matching on [16].
struct Cap {
  static constexpr std::uint64_t kDefault = 2'027'025;  // (2*8-1)!!
  std::uint64_t limit = kDefault;
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Streaming counter: call count() once per yielded item; throws as soon as
// the cap would be exceeded.
class CapGuard {
 public:
  CapGuard(Cap cap, std::string what) : limit_(cap.limit), what_(std::move(what)) {}

  void count() {
    if (seen_ == limit_)
      throw CapExceeded("enumeration cap exceeded (" + std::to_string(limit_) +
                        ") while streaming " + what_);
    ++seen_;
  }

  std::uint64_t seen() const { return seen_; }

 private:
  std::uint64_t limit_;
  std::uint64_t seen_ = 0;
  std::string what_;
};

// Pre-check for enumerations whose total work is a known closed form.
inline void require_within_cap(std::uint64_t work, Cap cap, const std::string& what) {
  if (work > cap.limit)
    throw CapExceeded("enumeration cap exceeded: " + what + " needs " +
                      std::to_string(work) + " items, cap is " +
                      std::to_string(cap.limit));
}

}  // namespace fishburn
