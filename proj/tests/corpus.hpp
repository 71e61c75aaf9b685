#pragma once

// The shared test corpus, embedded so tests run from any directory. The
// same definitions live under data/ for the CLI.

#include <string>
#include <utility>
#include <vector>

#include "qss/pauli.hpp"

namespace qss_test {

inline qss::StabilizerCode make_code(const std::string& text) {
  return qss::parse_stabilizer_text(text);
}

// [[7,1]] code whose set {5,6,7} is qualified while {1,2,3,4} is forbidden
// yet not advance shareable under the entanglement-assisted criterion.
inline qss::StabilizerCode ramp71() {
  return make_code(
      "p=2 n=7\n"
      "XXXXIII\n"
      "ZZIIIII\n"
      "IIZZIII\n"
      "XXIIXZZ\n"
      "IIXXZXZ\n"
      "IZZIZXX\n");
}

inline qss::StabilizerCode five_qubit() {
  return make_code(
      "p=2 n=5\n"
      "XZZXI\n"
      "IXZZX\n"
      "XIXZZ\n"
      "ZXIXZ\n");
}

inline qss::StabilizerCode steane() {
  return make_code(
      "p=2 n=7\n"
      "IIIXXXX\n"
      "IXXIIXX\n"
      "XIXIXIX\n"
      "IIIZZZZ\n"
      "IZZIIZZ\n"
      "ZIZIZIZ\n");
}

inline qss::StabilizerCode four_two_two() {
  return make_code(
      "p=2 n=4\n"
      "XXXX\n"
      "ZZZZ\n");
}

inline qss::StabilizerCode five_qutrit() {
  return make_code(
      "p=3 n=5\n"
      "10020|01200\n"
      "01002|00120\n"
      "20100|00012\n"
      "02010|20001\n");
}

// k = 0 stabilizer state (Bell pair), for the degenerate paths.
inline qss::StabilizerCode bell_state() {
  return make_code(
      "p=2 n=2\n"
      "XX\n"
      "ZZ\n");
}

inline std::vector<std::pair<std::string, qss::StabilizerCode>> full_corpus() {
  return {{"five_qubit", five_qubit()},
          {"steane", steane()},
          {"four_two_two", four_two_two()},
          {"ramp_7_1", ramp71()},
          {"five_qutrit", five_qutrit()}};
}

}  // namespace qss_test
