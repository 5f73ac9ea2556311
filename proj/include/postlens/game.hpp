#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "postlens/types.hpp"

namespace postlens {

// Crossing: two sides of eight runners on an 8x8 board. A runner steps one
// square in any of the eight king directions onto an empty or enemy square
// (capturing). White starts on rank 0 and wins by reaching rank 7 or by
// capturing every black runner; black mirrors. 100 plies without a capture or
// 400 total plies is a draw, as is (defensively) a side with no legal move.

enum class Cell : std::uint8_t { Empty, White, Black };
enum class Color : std::uint8_t { White, Black };

inline Color opponent(Color c) { return c == Color::White ? Color::Black : Color::White; }
inline Cell cell_of(Color c) { return c == Color::White ? Cell::White : Cell::Black; }

enum class Outcome : std::uint8_t { Ongoing, WhiteWin, BlackWin, Draw };

inline constexpr int kRunnersPerSide = 8;
inline constexpr int kCapturelessDrawPlies = 100;
inline constexpr int kMaxGamePlies = 400;

struct Move {
  int source = 0;
  int target = 0;

  int index() const { return source * kSquares + target; }
  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move& a, const Move& b) { return a.index() <=> b.index(); }
};

// "a1" is square 0 (file a = column 0, rank 1 = row 0); "h8" is square 63.
std::string square_name(int square);
int parse_square(const std::string& name);
std::string move_name(const Move& move);
Move parse_move(const std::string& name);

struct GameState {
  std::array<Cell, kSquares> board{};
  Color side_to_move = Color::White;
  int ply = 0;
  int halfmove_since_capture = 0;

  static GameState initial();

  int count(Color c) const;
  std::uint64_t hash() const;
  friend bool operator==(const GameState&, const GameState&) = default;
};

// Board string over ".wb", square 0 first.
std::string board_string(const GameState& state);
GameState state_from_board(const std::string& board64, Color side_to_move, int ply = 0,
                           int halfmove_since_capture = 0);

struct LegalMoves {
  MoveMask mask;        // true exactly at legal (source, target) pairs
  bool terminal = false;
  int count = 0;
};

Outcome is_terminal(const GameState& state);
LegalMoves legal_moves(const GameState& state);
std::vector<Move> legal_move_list(const GameState& state);

// Throws RuleError on an illegal move (wrong mover, own-occupied target, ...).
GameState apply_move(const GameState& state, const Move& move);

// --- Model-facing encoding -------------------------------------------------

inline constexpr int kInputPlanes = 4;  // own, enemy, side-to-move, constant ones

// 64 x kInputPlanes binary planes from the mover's perspective.
Matrix board_planes(const GameState& state);

// Movement-based positional encoding: entry (i, j) is 1 if a runner could
// step from i to j on an empty board, -1 on the diagonal, 0 otherwise.
const Matrix& movement_positional_encoding();

}  // namespace postlens
