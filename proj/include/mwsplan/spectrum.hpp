// Copyright 2026 The mwsplan Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Flex-grid slot bookkeeping: first-fit contiguous search under spectrum
// continuity, all-or-nothing allocation, and fixed-FSR multi-line blocks.

#ifndef MWSPLAN_SPECTRUM_HPP_
#define MWSPLAN_SPECTRUM_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwsplan {

inline constexpr int kSlotsPerLink = 400;

enum class SlotState : std::uint8_t { kFree, kUsed, kReserved };

inline const char* SlotStateName(SlotState s) {
  switch (s) {
    case SlotState::kFree: return "free";
    case SlotState::kUsed: return "used";
    case SlotState::kReserved: return "reserved";
  }
  return "?";
}

struct Slot {
  SlotState state = SlotState::kFree;
  int owner = -1;  // lightpath id when used, MWS id when reserved

  bool operator==(const Slot&) const = default;
};

struct SlotBlock {
  int start_slot = 0;
  int width_slots = 0;

  int end() const { return start_slot + width_slots; }
  bool operator==(const SlotBlock&) const = default;
};

class SpectrumConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SlotCounts {
  int free = 0;
  int used = 0;
  int reserved = 0;
};

// A fixed-FSR block: n_lines adjacent sub-blocks of equal width on one route.
struct FsrReservation {
  std::vector<int> links;
  SlotBlock block;
  int n_lines = 0;
  int per_line_width_slots = 0;

  SlotBlock Line(int index) const {
    return {block.start_slot + index * per_line_width_slots, per_line_width_slots};
  }
  bool operator==(const FsrReservation&) const = default;
};

class SpectrumGrid {
 public:
  SpectrumGrid() = default;
  explicit SpectrumGrid(int num_links, int slots_per_link = kSlotsPerLink)
      : num_links_(num_links),
        slots_per_link_(slots_per_link),
        slots_(static_cast<size_t>(num_links) * slots_per_link) {
    if (num_links < 0 || slots_per_link <= 0) {
      throw std::invalid_argument("bad grid dimensions");
    }
  }

  int num_links() const { return num_links_; }
  int slots_per_link() const { return slots_per_link_; }

  const Slot& at(int link, int slot) const { return slots_[Index(link, slot)]; }

  // Lowest start index at which `width` slots are free on every link.
  std::optional<SlotBlock> FirstFit(std::span<const int> links, int width) const {
    if (width < 1) throw std::invalid_argument("block width must be >= 1");
    int start = 0;
    while (start + width <= slots_per_link_) {
      int blocked = -1;
      // Scan right-to-left so a hit lets us jump past it.
      for (int s = start + width - 1; s >= start && blocked < 0; --s) {
        for (int l : links) {
          if (at(l, s).state != SlotState::kFree) {
            blocked = s;
            break;
          }
        }
      }
      if (blocked < 0) return SlotBlock{start, width};
      start = blocked + 1;
    }
    return std::nullopt;
  }

  bool IsFree(std::span<const int> links, SlotBlock block) const {
    if (block.start_slot < 0 || block.width_slots < 1 || block.end() > slots_per_link_) {
      return false;
    }
    for (int l : links) {
      for (int s = block.start_slot; s < block.end(); ++s) {
        if (at(l, s).state != SlotState::kFree) return false;
      }
    }
    return true;
  }

  // Marks the block on every link, or throws and leaves the grid untouched.
  void Allocate(std::span<const int> links, SlotBlock block, int owner,
                SlotState state = SlotState::kUsed) {
    if (state == SlotState::kFree) throw std::invalid_argument("cannot allocate as free");
    if (!IsFree(links, block)) {
      throw SpectrumConflict("slots [" + std::to_string(block.start_slot) + ", " +
                             std::to_string(block.end()) + ") are not free on the path");
    }
    Fill(links, block, {state, owner});
  }

  void Release(std::span<const int> links, SlotBlock block) {
    Fill(links, block, Slot{});
  }

  // First-fit search for n_lines * per_line_width slots; the whole block is
  // reserved for `mws_id`. Lines become used through ActivateReservedLine.
  std::optional<SlotBlock> ReserveFixedFsr(std::span<const int> links, int n_lines,
                                           int per_line_width_slots, int mws_id) {
    if (n_lines < 1 || per_line_width_slots < 1) {
      throw std::invalid_argument("bad fixed-FSR reservation shape");
    }
    if (reservations_.count(mws_id)) {
      throw std::invalid_argument("MWS id " + std::to_string(mws_id) + " already reserved");
    }
    const std::optional<SlotBlock> block =
        FirstFit(links, n_lines * per_line_width_slots);
    if (!block) return std::nullopt;
    Fill(links, *block, {SlotState::kReserved, mws_id});
    reservations_[mws_id] = {std::vector<int>(links.begin(), links.end()), *block, n_lines,
                             per_line_width_slots};
    return block;
  }

  // Turns one reserved line of an MWS into used slots owned by `lightpath_id`.
  SlotBlock ActivateReservedLine(int mws_id, int line_index, int lightpath_id) {
    const auto it = reservations_.find(mws_id);
    if (it == reservations_.end()) {
      throw std::invalid_argument("unknown MWS id " + std::to_string(mws_id));
    }
    const FsrReservation& r = it->second;
    if (line_index < 0 || line_index >= r.n_lines) {
      throw std::out_of_range("line index out of range");
    }
    const SlotBlock line = r.Line(line_index);
    for (int l : r.links) {
      for (int s = line.start_slot; s < line.end(); ++s) {
        const Slot& slot = at(l, s);
        if (slot.state != SlotState::kReserved || slot.owner != mws_id) {
          throw SpectrumConflict("line " + std::to_string(line_index) + " of MWS " +
                                 std::to_string(mws_id) + " is not reserved");
        }
      }
    }
    Fill(r.links, line, {SlotState::kUsed, lightpath_id});
    return line;
  }

  const std::map<int, FsrReservation>& reservations() const { return reservations_; }

  SlotCounts Counts(int link) const {
    SlotCounts c;
    for (int s = 0; s < slots_per_link_; ++s) {
      switch (at(link, s).state) {
        case SlotState::kFree: ++c.free; break;
        case SlotState::kUsed: ++c.used; break;
        case SlotState::kReserved: ++c.reserved; break;
      }
    }
    return c;
  }

  // CSV dump: link_id,slot,state,owner (owner empty for free slots).
  void WriteCsv(std::ostream& out) const {
    out << "link_id,slot,state,owner\n";
    for (int l = 0; l < num_links_; ++l) {
      for (int s = 0; s < slots_per_link_; ++s) {
        const Slot& slot = at(l, s);
        out << l << ',' << s << ',' << SlotStateName(slot.state) << ',';
        if (slot.state != SlotState::kFree) out << slot.owner;
        out << '\n';
      }
    }
  }

  bool operator==(const SpectrumGrid&) const = default;

 private:
  size_t Index(int link, int slot) const {
    if (link < 0 || link >= num_links_ || slot < 0 || slot >= slots_per_link_) {
      throw std::out_of_range("slot index out of range");
    }
    return static_cast<size_t>(link) * slots_per_link_ + slot;
  }

  void Fill(std::span<const int> links, SlotBlock block, Slot value) {
    for (int l : links) {
      for (int s = block.start_slot; s < block.end(); ++s) slots_[Index(l, s)] = value;
    }
  }

  int num_links_ = 0;
  int slots_per_link_ = kSlotsPerLink;
  std::vector<Slot> slots_;
  std::map<int, FsrReservation> reservations_;
};

}  // namespace mwsplan

#endif  // MWSPLAN_SPECTRUM_HPP_
