"""회전 시스템으로 표현한 루트 평면 지도와 Tutte 분해."""
