#include "frogcolor/messages.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace frogcolor {
namespace {

enum Tag : std::uint8_t { kColoring = 1, kRefinement = 2, kBaseline = 3 };
enum Flag : std::uint8_t { kHasUp = 1, kHasDown = 2 };

template <typename T>
void put(WireBytes& b, std::size_t at, T value) {
  auto raw = std::bit_cast<std::array<std::uint8_t, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw.begin(), raw.end());
  for (std::size_t i = 0; i < sizeof(T); ++i) b[at + i] = raw[i];
}

template <typename T>
T get(const WireBytes& b, std::size_t at) {
  std::array<std::uint8_t, sizeof(T)> raw{};
  for (std::size_t i = 0; i < sizeof(T); ++i) raw[i] = b[at + i];
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw.begin(), raw.end());
  return std::bit_cast<T>(raw);
}

struct PayloadWriter {
  WireBytes& b;
  void operator()(const ColoringMessage& m) const {
    b[0] = kColoring;
    put<Color>(b, 4, m.color);
    put<double>(b, 8, m.theta);
    put<double>(b, 16, m.relevance);
  }
  void operator()(const RefinementMessage& m) const {
    b[0] = kRefinement;
    put<Color>(b, 4, m.color);
    put<std::uint64_t>(b, 8, m.power);
  }
  void operator()(const BaselineMessage& m) const {
    b[0] = kBaseline;
    b[2] = static_cast<std::uint8_t>(m.status);
    put<Color>(b, 4, m.color);
  }
};

}  // namespace

Message piggyback_encode(const TrackerFields& fields, Message msg) {
  msg.tracker = fields;
  return msg;
}

TrackerFields piggyback_decode(const Message& msg) { return msg.tracker; }

// Layout: [0] tag, [1] tracker flags, [2] baseline status, [4,8) color,
// [8,16) theta or power, [16,24) relevance, [24,28) up round,
// [28,32) up color, [32,36) down round, [36,40) zero.
WireBytes wire_encode(const Message& msg) {
  WireBytes b{};
  std::visit(PayloadWriter{b}, msg.payload);
  if (msg.tracker.up) {
    b[1] |= kHasUp;
    put<Round>(b, 24, msg.tracker.up->round);
    put<Color>(b, 28, msg.tracker.up->color);
  }
  if (msg.tracker.down) {
    b[1] |= kHasDown;
    put<Round>(b, 32, *msg.tracker.down);
  }
  return b;
}

Message wire_decode(const WireBytes& b) {
  Message msg;
  switch (b[0]) {
    case kColoring:
      msg.payload = ColoringMessage{get<double>(b, 8), get<Color>(b, 4), get<double>(b, 16)};
      break;
    case kRefinement:
      msg.payload = RefinementMessage{get<Color>(b, 4), get<std::uint64_t>(b, 8)};
      break;
    case kBaseline:
      if (b[2] > 1) throw std::invalid_argument("unknown baseline status");
      msg.payload = BaselineMessage{static_cast<BaselineStatus>(b[2]), get<Color>(b, 4)};
      break;
    default:
      throw std::invalid_argument("unknown message tag");
  }
  if (b[1] & ~(kHasUp | kHasDown)) throw std::invalid_argument("unknown tracker flags");
  if (b[1] & kHasUp) msg.tracker.up = UpReport{get<Round>(b, 24), get<Color>(b, 28)};
  if (b[1] & kHasDown) msg.tracker.down = get<Round>(b, 32);
  return msg;
}

}  // namespace frogcolor
