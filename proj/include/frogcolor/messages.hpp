#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "frogcolor/graph.hpp"

namespace frogcolor {

using Round = std::uint32_t;

// Phase-I broadcast. relevance lies in (0, 1].
struct ColoringMessage {
  double theta = 0.0;
  Color color = 1;
  double relevance = 1.0;

  friend bool operator==(const ColoringMessage&, const ColoringMessage&) = default;
};

// Phase-II broadcast. power 0 means unpowered.
struct RefinementMessage {
  Color color = 1;
  std::uint64_t power = 0;

  friend bool operator==(const RefinementMessage&, const RefinementMessage&) = default;
};

enum class BaselineStatus : std::uint8_t { kTentative = 0, kFinal = 1 };

struct BaselineMessage {
  BaselineStatus status = BaselineStatus::kTentative;
  Color color = 1;

  friend bool operator==(const BaselineMessage&, const BaselineMessage&) = default;
};

using Payload = std::variant<ColoringMessage, RefinementMessage, BaselineMessage>;

// Upward convergecast report: the maximum color of a subtree in `round`.
struct UpReport {
  Round round = 0;
  Color color = 0;

  friend bool operator==(const UpReport&, const UpReport&) = default;
};

// Fields the best-coloring tracker attaches to regular messages.
struct TrackerFields {
  std::optional<UpReport> up;
  std::optional<Round> down;

  bool empty() const { return !up && !down; }
  friend bool operator==(const TrackerFields&, const TrackerFields&) = default;
};

struct Message {
  Payload payload;
  TrackerFields tracker;

  friend bool operator==(const Message&, const Message&) = default;
};

struct Envelope {
  NodeId sender = 0;
  Round round = 0;
  Message message;
};

Message piggyback_encode(const TrackerFields& fields, Message msg);
TrackerFields piggyback_decode(const Message& msg);

// Fixed-width little-endian wire form. Every message, with or without
// tracker fields, occupies exactly kWireSize bytes.
inline constexpr std::size_t kWireSize = 40;
using WireBytes = std::array<std::uint8_t, kWireSize>;

WireBytes wire_encode(const Message& msg);
// Throws std::invalid_argument on an unknown payload tag or flag bits.
Message wire_decode(const WireBytes& bytes);

}  // namespace frogcolor
