// Copyright 2026 The mbgate Authors
//
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

#ifndef MBGATE_CATALOG_HPP
#define MBGATE_CATALOG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mbgate/pattern.hpp"

namespace mbgate {

/// Builds a measurement basis from a two-ket template.
///
/// `ops` has one symbol per qubit: 'x' or 'z' consume one label bit each (in
/// order) and apply that Pauli when the bit is 1; 'i' leaves the qubit alone.
/// Each ket symbol is one of 0 1 + - m, where m = (|0> - i|1>)/sqrt2.
/// Vector (bits, s) is ops(bits) (|plus> + s |minus>), normalized; vectors
/// are listed bits-lexicographic with + before -.
MeasurementGroup templated_group(std::string name, QubitSubset qubits, std::string_view ops,
                                 std::string_view plus, std::string_view minus);

/// Product ket from symbols 0 1 + - m.
StateVector product_ket(std::string_view symbols);

/// The resource pair (|00> + |01> + |10> - |11>)/2.
StateVector h_pair();
/// (|00> + |11>)/sqrt2 and friends.
StateVector bell_phi_plus();
StateVector bell_phi_minus();
StateVector bell_psi_plus();
StateVector bell_psi_minus();

StateVector ket_terms(std::size_t num_qubits, const std::vector<std::pair<Complex, std::string>> &terms);

GatePattern single_qubit_pattern(const Unitary &u);
GatePattern phase_gate_pattern();
GatePattern pi8_gate_pattern();

/// Pair state on e e' and alpha basis family for the two-qubit CZ wiring.
enum class LinkResource { H, PhiPlus, PhiMinus, PsiPlus, PsiMinus };
enum class AlphaBasis { Ghz, PlusMinus };

/// General CZ wiring; cc' and dd' are Phi+.
GatePattern controlled_z_configuration(LinkResource link, AlphaBasis alpha);

enum class CzRow { HRow, BellRow };
GatePattern controlled_z_pattern(CzRow row);

/// CZ wiring with the e e' pair removed; alpha = (a, c'), beta = (b, d').
enum class PairBasis { Bell, HPair };
GatePattern cz_without_link_pattern(PairBasis basis);

/// n link pairs between the two measurement groups.  Target stays U_cz;
/// `predicted_target` records diag(1,1,1,(-1)^n).
GatePattern chain_cz_pattern(std::size_t n);

GatePattern triple_cz_pattern();
GatePattern controlled_phase_pattern();
GatePattern cnot_pattern();

enum class SwapResource {
    /// 000 + 101 + 010 - 111 on (c, c', c'') as written.
    Plain,
    /// Same with a Hadamard on c' (GHZ).
    HadamardOnMiddle,
};
GatePattern swap_pattern(SwapResource resource = SwapResource::Plain);

enum class ToffoliVariant {
    /// Second branch |1 - 0 1>; the family is not a basis.
    Literal,
    /// Second branch |1 - 1 1>.
    Corrected,
};
GatePattern toffoli_pattern(ToffoliVariant variant = ToffoliVariant::Corrected);

enum class FredkinVariant {
    /// sx^k on h''.
    Literal,
    /// sx^k on i'' instead.
    FlipOnI,
};
GatePattern fredkin_pattern(FredkinVariant variant = FredkinVariant::Literal);

/// Simulates the controlled-phase wiring with phases k, kt (on the alpha and
/// beta GHZ-like vectors) and p, m, n (on the e e', c c', d d' pairs) for the
/// outcome pair where both bases take their first vector.  Returns the
/// effective operator scaled so that its (0,0) entry is 1.  Throws
/// UsageError when a parameter is not unit modulus.
Unitary parameterized_link_operator(Complex k, Complex kt, Complex p, Complex m, Complex n);

/// Closed form of the same operator: diag(1, n p conj(kt), m conj(k), -m n p conj(k kt)).
Matrix parameterized_link_formula(Complex k, Complex kt, Complex p, Complex m, Complex n);

struct CatalogEntry {
    std::string name;
    std::string usage;
    std::string description;
};

/// Names accepted by the command line, in listing order.
const std::vector<CatalogEntry> &catalog_entries();

}  // namespace mbgate

#endif
