"""
测试用文档构造工具与 hypothesis 策略

句子用紧凑写法描述: "مشروع/NNS تعليم/DTNN+ عن/IN"，
"+" 后缀表示带连接词前缀。
"""

from typing import List, Optional, Sequence, Tuple

from hypothesis import strategies as st

from analysis.document import AnalyzedDocument, Token
from analysis.pos_tags import PosTag
from analysis.sentence_flags import build_sentence
from keyphrases.candidates import PhraseOccurrence
from summarizer.ranking import KeyphraseRanking, RankedKeyphrase


def _surface(lemma: str, pos: PosTag, conj: bool) -> str:
    surface = ('ال' + lemma) if pos.is_definite else lemma
    return ('و' + surface) if conj else surface


def sentence_tokens(spec: str, sent_index: int = 0) -> List[Token]:
    tokens = []
    for word_index, item in enumerate(spec.split()):
        conj = item.endswith('+')
        lemma, _, tag = item.rstrip('+').rpartition('/')
        pos = PosTag(tag)
        tokens.append(Token(
            surface=_surface(lemma, pos, conj),
            lemma=lemma,
            pos=pos,
            conj_prefix=conj,
            sent_index=sent_index,
            word_index=word_index,
        ))
    return tokens


def make_doc(*sentences: str, terminator: Optional[str] = '.', source_id: str = "test") -> AnalyzedDocument:
    """每个参数描述一个句子"""
    records = tuple(
        build_sentence(sentence_tokens(spec, i), terminator)
        for i, spec in enumerate(sentences)
    )
    return AnalyzedDocument(sentences=records, source_id=source_id)


def ranked(form: str, normalized: float = 1.0, lda_score: Optional[float] = None,
           first: Tuple[int, int] = (0, 0)) -> RankedKeyphrase:
    lemmas = tuple(form.split())
    return RankedKeyphrase(
        abstract_form=form,
        lemmas=lemmas,
        lda_score=normalized if lda_score is None else lda_score,
        normalized_score=normalized,
        first=PhraseOccurrence(first[0], first[1], len(lemmas)),
    )


def make_ranking(entries: Sequence[RankedKeyphrase]) -> KeyphraseRanking:
    return KeyphraseRanking(entries=tuple(entries), k=max(len(entries), 1))


# ============================================================================
# hypothesis 策略
# ============================================================================

LEMMA_POOL = ('كتاب', 'بيت', 'طفل', 'عمل', 'علم', 'نظام')

TAG_POOL = (
    PosTag.NN, PosTag.NNS, PosTag.DTNN, PosTag.DTNNS, PosTag.JJ, PosTag.DTJJ,
    PosTag.NUM, PosTag.IN, PosTag.PART, PosTag.RB, PosTag.VV,
)

_token_specs = st.tuples(
    st.sampled_from(LEMMA_POOL),
    st.sampled_from(TAG_POOL),
    st.booleans(),
)


@st.composite
def documents(draw, max_sentences: int = 5, max_tokens: int = 8, min_sentences: int = 1) -> AnalyzedDocument:
    """小词表随机预标注文档，保证短语重复出现"""
    n_sentences = draw(st.integers(min_sentences, max_sentences))
    records = []
    for s in range(n_sentences):
        specs = draw(st.lists(_token_specs, min_size=1, max_size=max_tokens))
        tokens = [
            Token(
                surface=_surface(lemma, pos, conj),
                lemma=lemma,
                pos=pos,
                conj_prefix=conj,
                sent_index=s,
                word_index=w,
            )
            for w, (lemma, pos, conj) in enumerate(specs)
        ]
        terminator = draw(st.sampled_from(('.', '،', '؟', None)))
        records.append(build_sentence(tokens, terminator))
    return AnalyzedDocument(sentences=tuple(records), source_id="generated")


@st.composite
def rankings(draw, max_keyphrases: int = 6) -> KeyphraseRanking:
    """由词表短语构成的合成关键短语排序"""
    forms = draw(st.lists(
        st.lists(st.sampled_from(LEMMA_POOL), min_size=1, max_size=2).map(' '.join),
        min_size=0,
        max_size=max_keyphrases,
        unique=True,
    ))
    entries = [
        ranked(form, draw(st.floats(min_value=0.01, max_value=1.0)))
        for form in forms
    ]
    return make_ranking(entries)
