"""Palindromic tree (Eertree) with series links; fast palindromic-length path."""

from __future__ import annotations

from .words import Word

_INF = float("inf")


class Eertree:
    """One node per distinct palindromic substring, plus two roots.

    Node 0 is the length -1 root, node 1 the length 0 root.  Series links
    group palindromic suffixes into arithmetic series, which is what makes
    the palindromic-length DP O(n log n).
    """

    def __init__(self, word: Word):
        self.source = word
        s = word.codes
        n = len(s)
        length = [-1, 0]
        link = [0, 0]
        diff = [0, 0]
        slink = [0, 0]
        trans: list[dict[int, int]] = [{}, {}]
        suffix_len = [0] * (n + 1)  # longest palindromic suffix of each prefix
        ans = [0] + [_INF] * n
        series_ans = [0, 0]

        last = 1
        for i in range(n):
            c = s[i]
            # longest palindromic suffix of s[..i] that can be extended by c
            x = last
            while True:
                l = length[x]
                if i - l - 1 >= 0 and s[i - l - 1] == c:
                    break
                x = link[x]
            nxt = trans[x].get(c)
            if nxt is None:
                # new palindrome: find its suffix link first
                y = link[x]
                while True:
                    l = length[y]
                    if i - l - 1 >= 0 and s[i - l - 1] == c:
                        break
                    y = link[y]
                cur_len = length[x] + 2
                if cur_len == 1:
                    cur_link = 1
                else:
                    cur_link = trans[y][c]
                nxt = len(length)
                length.append(cur_len)
                link.append(cur_link)
                d = cur_len - length[cur_link]
                diff.append(d)
                slink.append(cur_link if d != diff[cur_link] else slink[cur_link])
                trans.append({})
                series_ans.append(0)
                trans[x][c] = nxt
            last = nxt
            suffix_len[i + 1] = length[last]

            # DP over palindromic-suffix series
            j = i + 1
            best = ans[j]
            v = last
            while length[v] > 0:
                sl = slink[v]
                series_ans[v] = ans[j - length[sl] - diff[v]]
                lk = link[v]
                if diff[v] == diff[lk]:
                    sv = series_ans[lk]
                    if sv < series_ans[v]:
                        series_ans[v] = sv
                cand = series_ans[v] + 1
                if cand < best:
                    best = cand
                v = sl
            ans[j] = best

        self._length = length
        self._link = link
        self._slink = slink
        self._trans = trans
        self._ans = ans
        self.suffix_len = suffix_len

    @property
    def node_count(self) -> int:
        """Number of distinct palindromic substrings (roots excluded)."""
        return len(self._length) - 2

    def palindromic_length(self) -> int:
        return int(self._ans[len(self.source)]) if self.source else 0


def semigroup_pl_fast(w: Word) -> int:
    """Palindromic length via the Eertree series-link DP."""
    return Eertree(w).palindromic_length()
