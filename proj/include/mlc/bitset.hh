#ifndef MLC_GUARD_MLC_BITSET_HH
#define MLC_GUARD_MLC_BITSET_HH 1

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace mlc
{
    /**
     * Fixed-size set of small integers stored as 64-bit words. Padding bits
     * above size() are always zero, so word-level operations never need
     * masking.
     */
    class Bitset
    {
        public:
            using Word = std::uint64_t;
            static constexpr int bits_per_word = 64;
            static constexpr int npos = -1;

        private:
            int _size = 0;
            std::vector<Word> _words;

        public:
            Bitset() = default;

            explicit Bitset(int size) :
                _size(size),
                _words((size + bits_per_word - 1) / bits_per_word, 0)
            {
            }

            static auto words_for(int size) -> int
            {
                return (size + bits_per_word - 1) / bits_per_word;
            }

            auto size() const -> int
            {
                return _size;
            }

            auto word_count() const -> int
            {
                return static_cast<int>(_words.size());
            }

            auto words() const -> std::span<const Word>
            {
                return _words;
            }

            auto word(int i) const -> Word
            {
                return _words[i];
            }

            auto set(int i) -> void
            {
                _words[i / bits_per_word] |= Word{1} << (i % bits_per_word);
            }

            auto reset(int i) -> void
            {
                _words[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word));
            }

            auto test(int i) const -> bool
            {
                return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1;
            }

            auto set_all() -> void
            {
                for (auto & w : _words)
                    w = ~Word{0};
                if (auto tail = _size % bits_per_word ; tail != 0)
                    _words.back() = (Word{1} << tail) - 1;
            }

            auto clear() -> void
            {
                for (auto & w : _words)
                    w = 0;
            }

            auto any() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return true;
                return false;
            }

            auto empty() const -> bool
            {
                return ! any();
            }

            auto count() const -> int
            {
                int result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            /// Lowest set bit, or npos.
            auto first() const -> int
            {
                for (int i = 0, i_end = word_count() ; i < i_end ; ++i)
                    if (_words[i])
                        return i * bits_per_word + std::countr_zero(_words[i]);
                return npos;
            }

            /// Number of set bits strictly below position i.
            auto rank(int i) const -> int
            {
                int result = 0;
                int w = i / bits_per_word;
                for (int k = 0 ; k < w ; ++k)
                    result += std::popcount(_words[k]);
                if (auto tail = i % bits_per_word ; tail != 0)
                    result += std::popcount(_words[w] & ((Word{1} << tail) - 1));
                return result;
            }

            auto intersect_with(const Bitset & other) -> void
            {
                for (int i = 0, i_end = word_count() ; i < i_end ; ++i)
                    _words[i] &= other._words[i];
            }

            /// The bit-parallel filtering step: this &= ~other.
            auto intersect_with_complement(const Bitset & other) -> void
            {
                for (int i = 0, i_end = word_count() ; i < i_end ; ++i)
                    _words[i] &= ~other._words[i];
            }

            auto union_with(const Bitset & other) -> void
            {
                for (int i = 0, i_end = word_count() ; i < i_end ; ++i)
                    _words[i] |= other._words[i];
            }

            /// Calls f(i) for each set bit i in ascending order.
            template <typename F>
            auto for_each(F && f) const -> void
            {
                for (int i = 0, i_end = word_count() ; i < i_end ; ++i) {
                    Word w = _words[i];
                    while (w) {
                        f(i * bits_per_word + std::countr_zero(w));
                        w &= w - 1;
                    }
                }
            }

            auto to_vector() const -> std::vector<int>
            {
                std::vector<int> result;
                result.reserve(count());
                for_each([&] (int i) { result.push_back(i); });
                return result;
            }

            friend auto operator== (const Bitset &, const Bitset &) -> bool = default;
    };
}

#endif
