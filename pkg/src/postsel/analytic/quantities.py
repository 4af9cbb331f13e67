import enum


class Quantity(enum.Enum):
    CohNorm = "CohNorm"
    CohMeanN = "CohMeanN"
    CohA2A2 = "CohA2A2"
    CohXphi = "CohXphi"
    CohA2 = "CohA2"
    SqNorm = "SqNorm"
    SqAmp = "SqAmp"
    SqMeanN = "SqMeanN"
    SqA2A2 = "SqA2A2"
    SqXphi = "SqXphi"
    SqX2 = "SqX2"
    SqInitG2 = "SqInitG2"
    SqInitQ = "SqInitQ"
    SqInitSphi = "SqInitSphi"
    CatNorm = "CatNorm"
    CatMeanN = "CatMeanN"
    CatA2A2 = "CatA2A2"
    CatAmean = "CatAmean"
    CatA2 = "CatA2"
    CatInitQ = "CatInitQ"
    CatInitG2 = "CatInitG2"
    CatInitSphi = "CatInitSphi"


class Status(enum.Enum):
    Match = "Match"
    PaperTypoSuspected = "PaperTypoSuspected"
    Fail = "Fail"
