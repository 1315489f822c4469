// Built with -mavx2; only reached through the runtime dispatch in matgroup.cpp.
#include "matgroup.hpp"

#include <immintrin.h>
#include <stdexcept>

namespace matgroup {

Mat8 mul_avx2(const Mat8& a, const Mat8& b) {
    // Rows of b widened to int16, duplicated into both 128-bit lanes.
    __m256i brow[8];
    for (int k = 0; k < 8; ++k) {
        __m128i r8 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(b.data() + 8 * k));
        __m128i r16 = _mm_cvtepi8_epi16(r8);
        brow[k] = _mm256_broadcastsi128_si256(r16);
    }
    Mat8 out;
    __m256i odd = _mm256_setzero_si256();
    __m256i lo = _mm256_set1_epi16(-127 * 2), hi = _mm256_set1_epi16(127 * 2);
    __m256i bad = _mm256_setzero_si256();
    // Two output rows per iteration: row i in the low lane, row i+1 in the high lane.
    for (int i = 0; i < 8; i += 2) {
        __m256i acc = _mm256_setzero_si256();
        for (int k = 0; k < 8; ++k) {
            __m256i s = _mm256_setr_m128i(_mm_set1_epi16(a[i * 8 + k]), _mm_set1_epi16(a[(i + 1) * 8 + k]));
            acc = _mm256_add_epi16(acc, _mm256_mullo_epi16(s, brow[k]));
        }
        odd = _mm256_or_si256(odd, acc);
        bad = _mm256_or_si256(bad, _mm256_or_si256(_mm256_cmpgt_epi16(lo, acc), _mm256_cmpgt_epi16(acc, hi)));
        __m256i half = _mm256_srai_epi16(acc, 1);
        __m128i packed = _mm_packs_epi16(_mm256_castsi256_si128(half), _mm256_extracti128_si256(half, 1));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + 8 * i), packed);
    }
    __m256i lowbits = _mm256_and_si256(odd, _mm256_set1_epi16(1));
    if (!_mm256_testz_si256(lowbits, lowbits)) throw std::domain_error("Mat8: odd product entry");
    if (!_mm256_testz_si256(bad, bad)) throw std::overflow_error("Mat8: product entry out of range");
    return out;
}

} // namespace matgroup
