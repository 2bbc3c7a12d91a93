"""지도와 항 사이의 병렬 Tutte 분해 전단사."""
