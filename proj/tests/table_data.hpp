#ifndef TNCLASS_TESTS_TABLE_DATA_HPP
#define TNCLASS_TESTS_TABLE_DATA_HPP

#include <utility>
#include <vector>

/* published p_n for 107 <= n < 1000, transcribed from the printed table */
inline std::vector<std::pair<long, char const *>> const published_table = {
    { 107, "x^3 - 2x^2 + 4x - 1" },
    { 131, "x^5 + x^4 - x^3 - 3x^2 + 5x - 1" },
    { 155, "x^4 + 2x^3 + 5x^2 + 4x - 1" },
    { 179, "x^5 - 2x^4 + 5x^3 - x^2 + 6x - 1" },
    { 203, "x^4 - 3x^3 + 7x - 1" },
    { 227, "x^5 - 5x^4 + 9x^3 - 9x^2 + 9x - 1" },
    { 251, "x^7 + 5x^6 + 6x^5 - 2x^4 - 4x^3 + 2x^2 + 9x - 1" },
    { 275, "x^4 - x^3 + 6x^2 - 11x + 1" },
    { 299, "x^8 + x^7 - x^6 - 12x^5 + 16x^4 - 12x^3 + 15x^2 - 13x + 1" },
    { 323, "x^4 - x^3 + 4x^2 + 13x - 1" },
    { 347, "x^5 + 7x^4 + 21x^3 + 27x^2 + 13x - 1" },
    { 371, "x^8 + 9x^6 - 10x^5 + 14x^4 + 8x^3 - 23x^2 + 18x - 1" },
    { 395, "x^8 - x^7 + 5x^6 + 16x^5 + 28x^4 + 24x^3 + 27x^2 + 17x - 1" },
    { 419, "x^9 - 6x^8 + 12x^7 - 7x^6 + 12x^5 - 8x^4 + 31x^3 + 10x^2 + 20x - 1" },
    { 443, "x^5 - 4x^4 - 3x^3 + 17x^2 + 22x - 1" },
    { 467, "x^7 + 6x^6 + 7x^5 - 3x^4 + 3x^3 - 23x^2 + 26x - 1" },
    { 491, "x^9 + x^8 + 16x^7 + 2x^6 + 37x^5 - 31x^4 + 44x^3 - 40x^2 + 29x - 1" },
    { 515, "x^6 + 8x^5 + 32x^4 + 60x^3 + 68x^2 + 28x - 1" },
    { 539, "x^8 - 6x^7 + 28x^6 - 56x^5 + 77x^4 - 56x^3 + 28x^2 - 34x + 1" },
    { 563, "x^9 + 4x^8 + 6x^7 - 11x^6 + 44x^5 - 76x^4 + 91x^3 - 64x^2 + 38x - 1" },
    { 587, "x^7 + x^6 + 16x^5 - 12x^4 + 20x^3 + 24x^2 + 39x - 1" },
    { 611, "x^10 - 8x^9 + 35x^8 - 62x^7 - x^6 + 116x^5 - 65x^4 - 100x^3 + 125x^2 - 46x + 1" },
    { 635, "x^10 - 11x^9 + 50x^8 - 121x^7 + 201x^6 - 192x^5 + 87x^4 + 51x^3 - 98x^2 + 49x - 1" },
    { 659, "x^11 - 7x^10 + 7x^9 + 27x^8 + 19x^7 - 43x^6 - 5x^5 + 91x^4 + 157x^3 + 97x^2 + 49x - 1" },
    { 683, "x^5 + 6x^4 - 5x^3 - 41x^2 + 56x - 1" },
    { 707, "x^6 + 4x^5 + 30x^4 + 72x^3 + 108x^2 + 58x - 1" },
    { 731, "x^12 + 7x^11 + 25x^10 + 12x^9 + 41x^8 + 9x^7 + 92x^6 + 73x^5 - 133x^4 + 216x^3 - 153x^2 + 67x - 1" },
    { 755, "x^12 - 2x^11 + 18x^10 + 50x^9 + 82x^8 + 182x^7 + 360x^6 + 522x^5 + 598x^4 + 486x^3 + 262x^2 + 66x - 1" },
    { 779, "x^10 + 8x^9 + 24x^8 - 8x^7 - 11x^6 + 26x^5 + 81x^4 + 220x^3 + 98x^2 + 74x - 1" },
    { 803, "x^10 + 3x^9 + 26x^8 + 11x^7 - 65x^6 + 16x^5 + 7x^4 - 83x^3 + 150x^2 - 83x + 1" },
    { 827, "x^7 - 7x^6 + 38x^5 - 54x^4 + 112x^3 - 146x^2 + 89x - 1" },
    { 851, "x^10 - 7x^9 - x^8 + 86x^7 + 69x^6 - 201x^5 - 219x^4 + 94x^3 + 103x^2 - 95x + 1" },
    { 875, "x^10 - 10x^9 + 25x^8 + 10x^7 + 15x^6 + 94x^5 - 35x^4 - 120x^3 + 85x^2 + 100x - 1" },
    { 899, "x^14 + 16x^13 + 97x^12 + 308x^11 + 666x^10 + 1086x^9 + 1490x^8 + 1766x^7 + 1800x^6 + 1556x^5 + 998x^4 + 698x^3 + 229x^2 + 106x - 1" },
    { 923, "x^10 - x^9 + 30x^8 - 81x^7 - 29x^6 + 56x^5 + 211x^4 - 27x^3 - 110x^2 - 115x + 1" },
    { 947, "x^5 + 5x^4 + 7x^3 - 103x^2 + 125x - 1" },
    { 971, "x^15 - x^14 + 21x^13 + 133x^12 + 264x^11 + 310x^10 + 216x^9 + 62x^8 - 100x^7 - 300x^6 + 152x^5 + 338x^4 + 79x^3 - 285x^2 + 135x - 1" },
    { 995, "x^8 + 12x^7 + 59x^6 + 78x^5 + 12x^4 + 66x^3 + 289x^2 + 140x - 1" },
};

/* Ramanujan's original five */
inline std::vector<std::pair<long, char const *>> const ramanujan_table = {
    { 11, "x - 1" },
    { 35, "x^2 + x - 1" },
    { 59, "x^3 + 2x - 1" },
    { 83, "x^3 + 2x^2 + 2x - 1" },
    { 107, "x^3 - 2x^2 + 4x - 1" },
};

#endif
