"""항/지도 텍스트 형식과 DOT 출력."""
