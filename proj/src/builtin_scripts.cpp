#include "qdissect/script.hpp"

// The six embedded derivation scripts. The same texts ship as sample files
// under scripts/; parse_script is the single reader for both.

namespace qdissect {

namespace {

constexpr const char* kScript0 = R"QDS(# Dissection chain for the triple (5,21,35): on the progression M = 8n + 61,
# sixteen times the triangular count equals N(4M) - N(M).
script thm1-5,21,35

def T (* (psi 5) (psi 21) (psi 35))
def N (* (phi 5) (phi 21) (phi 35))
def r (- (ap N 4 0) N)

assert "2-dissection of each phi factor" N (* (+ (phi 20) (* 2 (q 5) (psi 40))) (+ (phi 84) (* 2 (q 21) (psi 168))) (+ (phi 140) (* 2 (q 35) (psi 280))))
assert "eq (34)" (ap N 4 0) (+ (* (phi 5) (phi 21) (phi 35)) (* 4 (q 10) (psi 10) (phi 21) (psi 70)) (* 4 (q 14) (phi 5) (psi 42) (psi 70)))
assert "r(n) series" r (+ (* 4 (q 10) (psi 10) (phi 21) (psi 70)) (* 4 (q 14) (phi 5) (psi 42) (psi 70)))
assert "odd part, phi factors isolated" (O r) (+ (* 4 (q 10) (psi 10) (psi 70) (O (phi 21))) (* 4 (q 14) (psi 42) (psi 70) (O (phi 5))))
assert "odd phi parts resolved" (O r) (+ (* 4 (q 10) (psi 10) (psi 70) 2 (q 21) (psi 168)) (* 4 (q 14) (psi 42) (psi 70) 2 (q 5) (psi 40)))
assert "r(2n+1) series" (ap r 2 1) (+ (* 8 (q 9) (psi 20) (psi 21) (psi 35)) (* 8 (q 15) (psi 5) (psi 35) (psi 84)))
assert "even part, psi pairs isolated" (E (ap r 2 1)) (+ (* 8 (q 9) (psi 20) (O (* (psi 21) (psi 35)))) (* 8 (q 15) (psi 84) (O (* (psi 5) (psi 35)))))
assert "psi pairs resolved" (E (ap r 2 1)) (+ (* 8 (q 9) (psi 20) (q 21) (psi 14) (psi 210)) (* 8 (q 15) (psi 84) (q 5) (psi 10) (psi 70)))
assert "r(4n+1) series" (ap r 4 1) (+ (* 8 (q 10) (psi 5) (psi 35) (psi 42)) (* 8 (q 15) (psi 7) (psi 10) (psi 105)))
assert "odd part, psi pairs isolated" (O (ap r 4 1)) (+ (* 8 (q 10) (psi 42) (O (* (psi 5) (psi 35)))) (* 8 (q 15) (psi 10) (E (* (psi 7) (psi 105)))))
assert "psi pairs resolved again" (O (ap r 4 1)) (+ (* 8 (q 10) (psi 42) (q 5) (psi 10) (psi 70)) (* 8 (q 15) (psi 10) (psi 42) (psi 70)))
assert "eq (36)" (ap r 8 5) (* 16 (q 7) (psi 5) (psi 21) (psi 35))
assert "16 T(n) q^(n+7) matches eq (36)" (* 16 (q 7) T) (ap r 8 5)
)QDS";

constexpr const char* kScript1 = R"QDS(# Dissection chain for (3,10,45), even indices: 16 T(2n) = N(4M) - N(M)
# with M = 16n + 58.
script thm2i-3,10,45

def T (* (psi 3) (psi 10) (psi 45))
def N (* (phi 3) (phi 10) (phi 45))
def s1 (- (ap N 4 0) N)

assert "even part of T, psi pair isolated" (E T) (* (psi 10) (E (* (psi 3) (psi 45))))
assert "even psi pair resolved" (E T) (* (psi 10) (psi 18) (psi 30))
assert "eq (28)" (ap T 2 0) (* (psi 5) (psi 9) (psi 15))
assert "2-dissection of each phi factor" N (* (+ (phi 12) (* 2 (q 3) (psi 24))) (+ (phi 40) (* 2 (q 10) (psi 80))) (+ (phi 180) (* 2 (q 45) (psi 360))))
assert "eq (30)" (ap N 4 0) (+ (* (phi 3) (phi 10) (phi 45)) (* 4 (q 12) (psi 6) (phi 10) (psi 90)))
assert "s1(n) series" s1 (* 4 (q 12) (psi 6) (phi 10) (psi 90))
assert "s1 is supported on even exponents" (E s1) (* 4 (q 12) (psi 6) (phi 10) (psi 90))
assert "s1(2n) series" (ap s1 2 0) (* 4 (q 6) (psi 3) (phi 5) (psi 45))
assert "odd part, factors isolated" (O (ap s1 2 0)) (+ (* 4 (q 6) (O (phi 5)) (E (* (psi 3) (psi 45)))) (* 4 (q 6) (E (phi 5)) (O (* (psi 3) (psi 45)))))
assert "parity parts resolved" (O (ap s1 2 0)) (+ (* 4 (q 6) 2 (q 5) (psi 40) (psi 18) (psi 30)) (* 4 (q 6) (phi 20) (+ (* (q 3) (phi 60) (psi 72)) (* (q 9) (phi 36) (psi 120)))))
assert "s1(4n+2) series" (ap s1 4 2) (+ (* 4 (q 4) (phi 10) (phi 30) (psi 36)) (* 8 (q 5) (psi 9) (psi 15) (psi 20)) (* 4 (q 7) (phi 10) (phi 18) (psi 60)))
assert "even part, psi pair isolated" (E (ap s1 4 2)) (+ (* 4 (q 4) (phi 10) (phi 30) (psi 36)) (* 8 (q 5) (psi 20) (O (* (psi 9) (psi 15)))))
assert "odd psi pair resolved" (E (ap s1 4 2)) (+ (* 4 (q 4) (phi 10) (phi 30) (psi 36)) (* 8 (q 5) (psi 20) (q 9) (psi 6) (psi 90)))
assert "s1(8n+2) series" (ap s1 8 2) (+ (* 4 (q 2) (phi 5) (phi 15) (psi 18)) (* 8 (q 7) (psi 3) (psi 10) (psi 45)))
assert "odd part, pairs isolated" (O (ap s1 8 2)) (+ (* 4 (q 2) (psi 18) (O (* (phi 5) (phi 15)))) (* 8 (q 7) (psi 10) (E (* (psi 3) (psi 45)))))
assert "pairs resolved" (O (ap s1 8 2)) (+ (* 4 (q 2) (psi 18) 2 (q 5) (psi 10) (psi 30)) (* 8 (q 7) (psi 10) (psi 18) (psi 30)))
assert "eq (31)" (ap s1 16 10) (* 16 (q 3) (psi 5) (psi 9) (psi 15))
assert "16 T(2n) q^(n+3) matches eq (31)" (* 16 (q 3) (ap T 2 0)) (ap s1 16 10)
)QDS";

constexpr const char* kScript2 = R"QDS(# Dissection chain for (1,6,7), odd indices: 16 T(2n+1) = N(4M) - N(M)
# with M = 16n + 22.
script thm2ii-1,6,7

def T (* (psi 1) (psi 6) (psi 7))
def N (* (phi 1) (phi 6) (phi 7))
def s2 (- (ap N 4 0) N)

assert "odd part of T, psi pair isolated" (O T) (* (psi 6) (O (* (psi 1) (psi 7))))
assert "odd psi pair resolved" (O T) (* (psi 6) (q 1) (psi 2) (psi 14))
assert "eq (16)" (ap T 2 1) (* (psi 1) (psi 3) (psi 7))
assert "2-dissection of each phi factor" N (* (+ (phi 4) (* 2 (q 1) (psi 8))) (+ (phi 24) (* 2 (q 6) (psi 48))) (+ (phi 28) (* 2 (q 7) (psi 56))))
assert "eq (18)" (ap N 4 0) (+ (* (phi 1) (phi 6) (phi 7)) (* 4 (q 2) (psi 2) (phi 6) (psi 14)))
assert "s2(n) series" s2 (* 4 (q 2) (psi 2) (phi 6) (psi 14))
assert "s2 is supported on even exponents" (E s2) (* 4 (q 2) (psi 2) (phi 6) (psi 14))
assert "s2(2n) series" (ap s2 2 0) (* 4 (q 1) (psi 1) (phi 3) (psi 7))
assert "odd part, factors isolated" (O (ap s2 2 0)) (+ (* 4 (q 1) (E (phi 3)) (E (* (psi 1) (psi 7)))) (* 4 (q 1) (O (phi 3)) (O (* (psi 1) (psi 7)))))
assert "parity parts resolved" (O (ap s2 2 0)) (+ (* 4 (q 1) (phi 12) (+ (* (psi 8) (phi 28)) (* (q 6) (phi 4) (psi 56)))) (* 4 (q 1) 2 (q 3) (psi 24) (q 1) (psi 2) (psi 14)))
assert "s2(4n+2) series" (ap s2 4 2) (+ (* 4 (psi 4) (phi 6) (phi 14)) (* 8 (q 2) (psi 1) (psi 7) (psi 12)) (* 4 (q 3) (phi 2) (phi 6) (psi 28)))
assert "odd part, psi pair isolated" (O (ap s2 4 2)) (+ (* 8 (q 2) (psi 12) (O (* (psi 1) (psi 7)))) (* 4 (q 3) (phi 2) (phi 6) (psi 28)))
assert "odd psi pair resolved again" (O (ap s2 4 2)) (+ (* 8 (q 2) (psi 12) (q 1) (psi 2) (psi 14)) (* 4 (q 3) (phi 2) (phi 6) (psi 28)))
assert "s2(8n+6) series" (ap s2 8 6) (+ (* 4 (q 1) (phi 1) (phi 3) (psi 14)) (* 8 (q 1) (psi 1) (psi 6) (psi 7)))
assert "even part, pairs isolated" (E (ap s2 8 6)) (+ (* 4 (q 1) (psi 14) (O (* (phi 1) (phi 3)))) (* 8 (q 1) (psi 6) (O (* (psi 1) (psi 7)))))
assert "odd pairs resolved" (E (ap s2 8 6)) (+ (* 4 (q 1) (psi 14) 2 (q 1) (psi 2) (psi 6)) (* 8 (q 1) (psi 6) (q 1) (psi 2) (psi 14)))
assert "eq (21)" (ap s2 16 6) (* 16 (q 1) (psi 1) (psi 3) (psi 7))
assert "16 T(2n+1) q^(n+1) matches eq (21)" (* 16 (q 1) (ap T 2 1)) (ap s2 16 6)
)QDS";

constexpr const char* kScript3 = R"QDS(# Dissection chain for (3,7,15): 16 T(n) = 3 N(M) - N(4M) with M = 8n + 25.
# The 4n-extraction of the N product reproduces it exactly, so the defect
# series t(n) = 3N(n) - N(4n) is twice the phi product.
script thm3-3,7,15

def T (* (psi 3) (psi 7) (psi 15))
def N (* (phi 3) (phi 7) (phi 15))
def t (- (* 3 N) (ap N 4 0))

assert "eq (42)" N (* (+ (phi 12) (* 2 (q 3) (psi 24))) (+ (phi 28) (* 2 (q 7) (psi 56))) (+ (phi 60) (* 2 (q 15) (psi 120))))
assert "eq (41)" (ap N 4 0) (* (phi 3) (phi 7) (phi 15))
assert "t(n) series" t (* 2 (phi 3) (phi 7) (phi 15))
assert "odd part of the phi product" (O t) (* 2 (O (* (phi 3) (phi 7) (phi 15))))
assert "odd part resolved" (O t) (* 2 (+ (* 2 (q 3) (psi 24) (phi 28) (phi 60)) (* 2 (q 7) (phi 12) (psi 56) (phi 60)) (* 2 (q 15) (phi 12) (phi 28) (psi 120)) (* 8 (q 25) (psi 24) (psi 56) (psi 120))))
assert "t(2n+1) series" (ap t 2 1) (+ (* 4 (q 1) (psi 12) (phi 14) (phi 30)) (* 4 (q 3) (phi 6) (psi 28) (phi 30)) (* 4 (q 7) (phi 6) (phi 14) (psi 60)) (* 16 (q 12) (psi 12) (psi 28) (psi 60)))
assert "only the triple psi term is even" (E (ap t 2 1)) (* 16 (q 12) (psi 12) (psi 28) (psi 60))
assert "t(4n+1) series" (ap t 4 1) (* 16 (q 6) (psi 6) (psi 14) (psi 30))
assert "t(4n+1) is supported on even exponents" (E (ap t 4 1)) (* 16 (q 6) (psi 6) (psi 14) (psi 30))
assert "eq (43)" (ap t 8 1) (* 16 (q 3) (psi 3) (psi 7) (psi 15))
assert "16 T(n) q^(n+3) matches eq (43)" (* 16 (q 3) T) (ap t 8 1)
)QDS";

constexpr const char* kScript4 = R"QDS(# Dissection chain for (1,6,15), even indices: 16 T(2n) = 3 N(M) - N(4M)
# with M = 16n + 22. The closing steps reduce a four-term phi/psi
# combination (lhs4) to a single psi product.
script thm4i-1,6,15

def T (* (psi 1) (psi 6) (psi 15))
def N (* (phi 1) (phi 6) (phi 15))
def u1 (- (* 3 N) (ap N 4 0))
def lhs4 (+ (* (phi 1) (phi 15)) (* -1 (phi 6) (phi 10)) (* 4 (q 4) (psi 2) (psi 30)) (* -4 (q 4) (psi 12) (psi 20)))

assert "even part of T, psi pair isolated" (E T) (* (psi 6) (E (* (psi 1) (psi 15))))
assert "even psi pair resolved" (E T) (* (psi 6) (psi 6) (psi 10))
assert "eq (4)" (ap T 2 0) (* (psi 3) (psi 3) (psi 5))
assert "2-dissection of each phi factor" N (* (+ (phi 4) (* 2 (q 1) (psi 8))) (+ (phi 24) (* 2 (q 6) (psi 48))) (+ (phi 60) (* 2 (q 15) (psi 120))))
assert "eq (7)" (ap N 4 0) (+ (* (phi 1) (phi 6) (phi 15)) (* 4 (q 4) (psi 2) (phi 6) (psi 30)))
assert "u1(n) series" u1 (+ (* 2 (phi 1) (phi 6) (phi 15)) (* -4 (q 4) (psi 2) (phi 6) (psi 30)))
assert "even part, phi pair isolated" (E u1) (+ (* 2 (phi 6) (E (* (phi 1) (phi 15)))) (* -4 (q 4) (psi 2) (phi 6) (psi 30)))
assert "even phi pair resolved" (E u1) (+ (* 2 (phi 6) (+ (* (phi 4) (phi 60)) (* 4 (q 16) (psi 8) (psi 120)))) (* -4 (q 4) (psi 2) (phi 6) (psi 30)))
assert "u1(2n) series" (ap u1 2 0) (+ (* 2 (phi 2) (phi 3) (phi 30)) (* -4 (q 2) (psi 1) (phi 3) (psi 15)) (* 8 (q 8) (phi 3) (psi 4) (psi 60)))
assert "odd part, factors isolated" (O (ap u1 2 0)) (+ (* 2 (phi 2) (phi 30) (O (phi 3))) (* -4 (q 2) (O (phi 3)) (E (* (psi 1) (psi 15)))) (* -4 (q 2) (E (phi 3)) (O (* (psi 1) (psi 15)))) (* 8 (q 8) (psi 4) (psi 60) (O (phi 3))))
assert "parity parts resolved" (O (ap u1 2 0)) (+ (* 2 (phi 2) (phi 30) 2 (q 3) (psi 24)) (* -4 (q 2) 2 (q 3) (psi 24) (psi 6) (psi 10)) (* -4 (q 2) (phi 12) (+ (* (q 1) (phi 20) (psi 24)) (* (q 3) (phi 12) (psi 40)))) (* 8 (q 8) (psi 4) (psi 60) 2 (q 3) (psi 24)))
assert "u1(4n+2) series" (ap u1 4 2) (+ (* 4 (q 1) (phi 1) (psi 12) (phi 15)) (* -4 (q 1) (phi 6) (phi 10) (psi 12)) (* -8 (q 2) (psi 3) (psi 5) (psi 12)) (* -4 (q 2) (phi 6) (phi 6) (psi 20)) (* 16 (q 5) (psi 2) (psi 12) (psi 30)))
assert "odd part, pairs isolated" (O (ap u1 4 2)) (+ (* 4 (q 1) (psi 12) (E (* (phi 1) (phi 15)))) (* -4 (q 1) (phi 6) (phi 10) (psi 12)) (* -8 (q 2) (psi 12) (O (* (psi 3) (psi 5)))) (* 16 (q 5) (psi 2) (psi 12) (psi 30)))
assert "pairs resolved" (O (ap u1 4 2)) (+ (* 4 (q 1) (psi 12) (+ (* (phi 4) (phi 60)) (* 4 (q 16) (psi 8) (psi 120)))) (* -4 (q 1) (phi 6) (phi 10) (psi 12)) (* -8 (q 2) (psi 12) (q 3) (psi 2) (psi 30)) (* 16 (q 5) (psi 2) (psi 12) (psi 30)))
assert "u1(8n+6) series" (ap u1 8 6) (+ (* 4 (phi 2) (psi 6) (phi 30)) (* -4 (phi 3) (phi 5) (psi 6)) (* 8 (q 2) (psi 1) (psi 6) (psi 15)) (* 16 (q 8) (psi 4) (psi 6) (psi 60)))
assert "even part, pairs isolated" (E (ap u1 8 6)) (+ (* 4 (phi 2) (psi 6) (phi 30)) (* -4 (psi 6) (E (* (phi 3) (phi 5)))) (* 8 (q 2) (psi 6) (E (* (psi 1) (psi 15)))) (* 16 (q 8) (psi 4) (psi 6) (psi 60)))
assert "even pairs resolved" (E (ap u1 8 6)) (+ (* 4 (phi 2) (psi 6) (phi 30)) (* -4 (psi 6) (+ (* (phi 12) (phi 20)) (* 4 (q 8) (psi 24) (psi 40)))) (* 8 (q 2) (psi 6) (psi 6) (psi 10)) (* 16 (q 8) (psi 4) (psi 6) (psi 60)))
assert "eq (9)" (ap u1 16 6) (+ (* 8 (q 1) (psi 3) (psi 3) (psi 5)) (* 4 (psi 3) lhs4))
assert "expansion toward eq (15)" lhs4 (+ (* (phi 4) (phi 60)) (* 2 (q 1) (psi 8) (phi 60)) (* 2 (q 15) (phi 4) (psi 120)) (* 4 (q 16) (psi 8) (psi 120)) (* -1 (phi 6) (phi 10)) (* 4 (q 4) (psi 2) (psi 30)) (* -2 (q 4) (psi 2) (psi 30)) (* -2 (q 4) (psi -2) (psi -30)))
assert "regrouped toward eq (15)" lhs4 (+ (* 2 (q 1) (+ (* (psi 8) (phi 60)) (* (q 3) (psi 2) (psi 30)) (* (q 14) (phi 4) (psi 120)))) (* (phi 4) (phi 60)) (* -1 (phi 6) (phi 10)) (* -2 (q 4) (psi -2) (psi -30)) (* 4 (q 16) (psi 8) (psi 120)))
assert "eq (15)" lhs4 (+ (* 2 (q 1) (psi 3) (psi 5)) (* (phi 4) (phi 60)) (* -1 (phi 6) (phi 10)) (* -2 (q 4) (psi -2) (psi -30)) (* 4 (q 16) (psi 8) (psi 120)))
assert "eq (11) with q^4" (* (phi 4) (phi 60)) (+ (* (phi -24) (phi -40)) (* 2 (q 4) (psi 12) (psi 20)))
assert "eq (12) with q^2" (* (phi 6) (phi 10)) (+ (* (phi -4) (phi -60)) (* 2 (q 4) (psi 2) (psi 30)))
assert "eq (11) with -q^4" (* (phi 6) (phi 10)) (+ (* (phi -24) (phi -40)) (* -2 (q 4) (psi -12) (psi -20)) (* 2 (q 4) (psi 2) (psi 30)))
assert "eq (13) with q^2" (* 2 (q 4) (psi -2) (psi -30)) (+ (* 4 (q 4) (psi 12) (psi 20)) (* -2 (q 4) (psi 2) (psi 30)))
assert "eq (10) with q^4" (* 4 (q 16) (psi 8) (psi 120)) (+ (* 2 (q 4) (psi 12) (psi 20)) (* -2 (q 4) (psi -12) (psi -20)))
assert "four-term reduction" lhs4 (* 2 (q 1) (psi 3) (psi 5))
assert "eq (14)" (ap u1 16 6) (* 16 (q 1) (psi 3) (psi 3) (psi 5))
assert "16 T(2n) q^(n+1) matches eq (14)" (* 16 (q 1) (ap T 2 0)) (ap u1 16 6)
)QDS";

constexpr const char* kScript5 = R"QDS(# Dissection chain for (2,3,5), odd indices: 16 T(2n+1) = 3 N(M) - N(4M)
# with M = 16n + 18. The closing steps reduce a four-term phi/psi
# combination (lhs4) to a single psi product.
script thm4ii-2,3,5

def T (* (psi 2) (psi 3) (psi 5))
def N (* (phi 2) (phi 3) (phi 5))
def u2 (- (* 3 N) (ap N 4 0))
def lhs4 (+ (* -1 (phi 2) (phi 30)) (* (phi 3) (phi 5)) (* 4 (q 2) (psi 6) (psi 10)) (* -4 (q 8) (psi 4) (psi 60)))

assert "odd part of T, psi pair isolated" (O T) (* (psi 2) (O (* (psi 3) (psi 5))))
assert "odd psi pair resolved" (O T) (* (psi 2) (q 3) (psi 2) (psi 30))
assert "eq (22)" (ap T 2 1) (* (q 1) (psi 1) (psi 1) (psi 15))
assert "2-dissection of each phi factor" N (* (+ (phi 8) (* 2 (q 2) (psi 16))) (+ (phi 12) (* 2 (q 3) (psi 24))) (+ (phi 20) (* 2 (q 5) (psi 40))))
assert "eq (24)" (ap N 4 0) (+ (* (phi 2) (phi 3) (phi 5)) (* 4 (q 2) (phi 2) (psi 6) (psi 10)))
assert "u2(n) series" u2 (+ (* 2 (phi 2) (phi 3) (phi 5)) (* -4 (q 2) (phi 2) (psi 6) (psi 10)))
assert "even part, phi pair isolated" (E u2) (+ (* 2 (phi 2) (E (* (phi 3) (phi 5)))) (* -4 (q 2) (phi 2) (psi 6) (psi 10)))
assert "even phi pair resolved" (E u2) (+ (* 2 (phi 2) (+ (* (phi 12) (phi 20)) (* 4 (q 8) (psi 24) (psi 40)))) (* -4 (q 2) (phi 2) (psi 6) (psi 10)))
assert "u2(2n) series" (ap u2 2 0) (+ (* 2 (phi 1) (phi 6) (phi 10)) (* -4 (q 1) (phi 1) (psi 3) (psi 5)) (* 8 (q 4) (phi 1) (psi 12) (psi 20)))
assert "odd part, factors isolated" (O (ap u2 2 0)) (+ (* 2 (phi 6) (phi 10) (O (phi 1))) (* -4 (q 1) (E (phi 1)) (E (* (psi 3) (psi 5)))) (* -4 (q 1) (O (phi 1)) (O (* (psi 3) (psi 5)))) (* 8 (q 4) (psi 12) (psi 20) (O (phi 1))))
assert "parity parts resolved" (O (ap u2 2 0)) (+ (* 2 (phi 6) (phi 10) 2 (q 1) (psi 8)) (* -4 (q 1) (phi 4) (+ (* (psi 8) (phi 60)) (* (q 14) (phi 4) (psi 120)))) (* -4 (q 1) 2 (q 1) (psi 8) (q 3) (psi 2) (psi 30)) (* 8 (q 4) (psi 12) (psi 20) 2 (q 1) (psi 8)))
assert "u2(4n+2) series" (ap u2 4 2) (+ (* -4 (phi 2) (psi 4) (phi 30)) (* 4 (phi 3) (psi 4) (phi 5)) (* -8 (q 2) (psi 1) (psi 4) (psi 15)) (* 16 (q 2) (psi 4) (psi 6) (psi 10)) (* -4 (q 7) (phi 2) (phi 2) (psi 60)))
assert "even part, pairs isolated" (E (ap u2 4 2)) (+ (* -4 (phi 2) (psi 4) (phi 30)) (* 4 (psi 4) (E (* (phi 3) (phi 5)))) (* -8 (q 2) (psi 4) (E (* (psi 1) (psi 15)))) (* 16 (q 2) (psi 4) (psi 6) (psi 10)))
assert "even pairs resolved" (E (ap u2 4 2)) (+ (* -4 (phi 2) (psi 4) (phi 30)) (* 4 (psi 4) (+ (* (phi 12) (phi 20)) (* 4 (q 8) (psi 24) (psi 40)))) (* -8 (q 2) (psi 4) (psi 6) (psi 10)) (* 16 (q 2) (psi 4) (psi 6) (psi 10)))
assert "u2(8n+2) series" (ap u2 8 2) (+ (* -4 (phi 1) (psi 2) (phi 15)) (* 4 (psi 2) (phi 6) (phi 10)) (* 8 (q 1) (psi 2) (psi 3) (psi 5)) (* 16 (q 4) (psi 2) (psi 12) (psi 20)))
assert "even part, pairs isolated again" (E (ap u2 8 2)) (+ (* -4 (psi 2) (E (* (phi 1) (phi 15)))) (* 4 (psi 2) (phi 6) (phi 10)) (* 8 (q 1) (psi 2) (O (* (psi 3) (psi 5)))) (* 16 (q 4) (psi 2) (psi 12) (psi 20)))
assert "pairs resolved again" (E (ap u2 8 2)) (+ (* -4 (psi 2) (+ (* (phi 4) (phi 60)) (* 4 (q 16) (psi 8) (psi 120)))) (* 4 (psi 2) (phi 6) (phi 10)) (* 8 (q 1) (psi 2) (q 3) (psi 2) (psi 30)) (* 16 (q 4) (psi 2) (psi 12) (psi 20)))
assert "eq (25)" (ap u2 16 2) (+ (* 8 (q 2) (psi 1) (psi 1) (psi 15)) (* 4 (psi 1) lhs4))
assert "expansion toward eq (26)" lhs4 (+ (* -1 (phi 2) (phi 30)) (* (phi 12) (phi 20)) (* 2 (q 3) (phi 20) (psi 24)) (* 2 (q 5) (phi 12) (psi 40)) (* 4 (q 8) (psi 24) (psi 40)) (* 2 (q 2) (psi 6) (psi 10)) (* 2 (q 2) (psi 6) (psi 10)) (* -4 (q 8) (psi 4) (psi 60)))
assert "regrouped toward eq (26)" lhs4 (+ (* 2 (q 2) (+ (* (psi 6) (psi 10)) (* (q 1) (phi 20) (psi 24)) (* (q 3) (phi 12) (psi 40)))) (* -1 (phi 2) (phi 30)) (* (phi 12) (phi 20)) (* 2 (q 2) (psi 6) (psi 10)) (* -4 (q 8) (psi 4) (psi 60)) (* 4 (q 8) (psi 24) (psi 40)))
assert "eq (26)" lhs4 (+ (* 2 (q 2) (psi 1) (psi 15)) (* -1 (phi 2) (phi 30)) (* (phi 12) (phi 20)) (* 2 (q 2) (psi 6) (psi 10)) (* -4 (q 8) (psi 4) (psi 60)) (* 4 (q 8) (psi 24) (psi 40)))
assert "eq (11) with q^2" (* (phi 2) (phi 30)) (+ (* (phi -12) (phi -20)) (* 2 (q 2) (psi 6) (psi 10)))
assert "eq (12) with q^4" (* (phi 12) (phi 20)) (+ (* (phi -8) (phi -120)) (* 2 (q 8) (psi 4) (psi 60)))
assert "eq (12) with -q^4" (* (phi 12) (phi 20)) (+ (* (phi -12) (phi -20)) (* -2 (q 8) (psi -4) (psi -60)) (* 2 (q 8) (psi 4) (psi 60)))
assert "eq (13) with q^4" (* 4 (q 8) (psi 24) (psi 40)) (+ (* 2 (q 8) (psi 4) (psi 60)) (* 2 (q 8) (psi -4) (psi -60)))
assert "four-term reduction" lhs4 (* 2 (q 2) (psi 1) (psi 15))
assert "eq (27)" (ap u2 16 2) (* 16 (q 2) (psi 1) (psi 1) (psi 15))
assert "16 T(2n+1) q^(n+1) matches eq (27)" (* 16 (q 1) (ap T 2 1)) (ap u2 16 2)
)QDS";

std::vector<ProofScript> parse_all() {
    std::vector<ProofScript> scripts;
    scripts.push_back(parse_script(kScript0));
    scripts.push_back(parse_script(kScript1));
    scripts.push_back(parse_script(kScript2));
    scripts.push_back(parse_script(kScript3));
    scripts.push_back(parse_script(kScript4));
    scripts.push_back(parse_script(kScript5));
    return scripts;
}

} // namespace

const std::vector<ProofScript>& builtin_scripts() {
    static const std::vector<ProofScript> scripts = parse_all();
    return scripts;
}

} // namespace qdissect
