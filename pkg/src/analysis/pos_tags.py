"""
词性标签集合
"""

from enum import Enum


class PosTag(str, Enum):
    """封闭词性标签集，DT 前缀表示带定冠词"""

    VV = 'VV'
    NN = 'NN'
    NNS = 'NNS'
    DTNN = 'DTNN'
    DTNNS = 'DTNNS'
    JJ = 'JJ'
    DTJJ = 'DTJJ'
    RB = 'RB'
    IN = 'IN'
    PART = 'PART'
    NUM = 'NUM'
    FW = 'FW'
    PUNC = 'PUNC'

    @property
    def is_definite(self) -> bool:
        return self.value.startswith('DT')

    @property
    def base(self) -> 'PosTag':
        """去掉定冠词标记后的基础标签"""
        return PosTag(self.value[2:]) if self.is_definite else self

    def with_article(self) -> 'PosTag':
        """加上定冠词标记；非名词性标签原样返回"""
        return _WITH_ARTICLE.get(self.base, self.base)

    @classmethod
    def parse(cls, value: str) -> 'PosTag':
        """按名称解析标签，未知标签抛出 ValueError"""
        return cls(value.strip())


_WITH_ARTICLE = {
    PosTag.NN: PosTag.DTNN,
    PosTag.NNS: PosTag.DTNNS,
    PosTag.JJ: PosTag.DTJJ,
}

# 需要非空词元的标签
LEMMA_REQUIRED_TAGS = frozenset({
    PosTag.VV, PosTag.NN, PosTag.NNS, PosTag.DTNN, PosTag.DTNNS,
    PosTag.JJ, PosTag.DTJJ, PosTag.NUM, PosTag.FW,
})
