#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace lazyarith {

/// Text destination for a computation. In Buffered mode nothing reaches the
/// consumer until flush(); discard() drops everything held.
class OutputSink {
 public:
  enum class Mode { Buffered, Streaming };
  using Consumer = std::function<void(std::string_view)>;

  explicit OutputSink(Consumer consumer, Mode mode = Mode::Buffered)
      : consumer_(std::move(consumer)), mode_(mode) {}

  explicit OutputSink(std::ostream& out, Mode mode = Mode::Buffered)
      : OutputSink([&out](std::string_view text) { out << text; }, mode) {}

  void write(std::string_view text) {
    if (mode_ == Mode::Streaming) {
      consumer_(text);
    } else {
      held_.append(text);
    }
  }

  void line(std::string_view text) {
    write(text);
    write("\n");
  }

  void flush() {
    if (held_.empty()) return;
    consumer_(held_);
    held_.clear();
  }

  void discard() noexcept { held_.clear(); }

  /// Switching to Streaming first flushes anything held.
  void set_mode(Mode mode) {
    if (mode == Mode::Streaming) flush();
    mode_ = mode;
  }

  Mode mode() const noexcept { return mode_; }
  std::size_t held_bytes() const noexcept { return held_.size(); }

 private:
  Consumer consumer_;
  Mode mode_;
  std::string held_;
};

}  // namespace lazyarith
